#include <doctest.h>

#include "ladder/jm.hpp"
#include "ladder/regularization.hpp"
#include "ladder/rim_hooks.hpp"
#include "oracles.hpp"

using namespace ladder;

namespace {

// Members of the class by per-ladder box counts (ladders found by walking).
std::vector<Partition> class_brute(const Partition& p, int ell)
{
    const auto key = oracle::ladder_counts(p, ell);
    std::vector<Partition> out;
    for (const auto& q : oracle::partitions(p.size())) {
        if (oracle::ladder_counts(q, ell) == key) {
            out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The literal disjunctive reading of the L-partition definition.
bool L_disjunctive(const Partition& p, int ell)
{
    for (const auto& b : p.boxes()) {
        const int h = hook_length(p, b);
        const int a = arm(p, b);
        const int l = leg(p, b);
        if (h % ell == 0 && (a < (ell - 1) * l || l < (ell - 1) * a)) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("regularization examples")
{
    const Modulus three(3);
    CHECK(regularize(Partition{2, 2, 2, 1, 1, 1}, three) == Partition{3, 3, 2, 1});
    CHECK(regularize(Partition{3, 3, 2, 1}, three) == Partition{3, 3, 2, 1});
    CHECK(regularize(Partition{2, 1, 1, 1, 1}, three) == Partition{3, 2, 1});
    CHECK(regularize(Partition{}, three) == Partition{});
}

TEST_CASE("regularization classes")
{
    const Modulus three(3);
    const auto rc = reg_class(Partition{2, 2, 2, 1, 1, 1}, three);
    CHECK(rc.representative_regular == Partition{3, 3, 2, 1});
    CHECK(rc.members
          == std::vector<Partition>{Partition{2, 2, 2, 1, 1, 1}, Partition{2, 2, 2, 2, 1}, Partition{3, 2, 1, 1, 1, 1},
                                    Partition{3, 2, 2, 2}, Partition{3, 3, 1, 1, 1}, Partition{3, 3, 2, 1}});
    CHECK(reg_class(Partition{1}, three).members == std::vector<Partition>{Partition{1}});
    CHECK(regularize(Partition{3, 3, 1, 1, 1}, three) == regularize(Partition{2, 2, 2, 2, 1}, three));

    for (int ell = 2; ell <= 4; ++ell) {
        const Modulus m(ell);
        for (int n = 0; n <= 12; ++n) {
            for (const auto& p : oracle::partitions(n)) {
                CHECK(reg_class(p, m).members == class_brute(p, ell));
                CHECK(ladder_counts(p, m) == oracle::ladder_counts(p, ell));
            }
        }
    }
}

TEST_CASE("lock labels of (6,5,4,3,1,1)")
{
    const Modulus three(3);
    const Partition p{6, 5, 4, 3, 1, 1};
    const auto locks = lock_labels(p, three);
    const std::set<BoxPos> expected{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1},
                                    {3, 2}, {4, 1}, {4, 2}, {5, 1}, {6, 1}};
    const auto got = locks.locked_boxes();
    CHECK(std::set<BoxPos>(got.begin(), got.end()) == expected);
    CHECK(deregularize(p, three) == Partition{3, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1});
    CHECK(lock_labels(Partition{1}, three).at({1, 1}) == LockLabel::LockedI);
    CHECK_THROWS_AS(locks.at({1, 7}), error);
}

TEST_CASE("lock labels of (3,3,2,1) move exactly the unlocked boxes")
{
    const Modulus three(3);
    const Partition p{3, 3, 2, 1};
    const auto s = deregularize(p, three);
    CHECK(s == Partition{2, 2, 2, 1, 1, 1});
    const auto locks = lock_labels(p, three);
    std::set<BoxPos> moved;
    for (const auto& b : p.boxes()) {
        if (!s.contains(b)) {
            moved.insert(b);
        }
    }
    for (const auto& b : p.boxes()) {
        if (moved.contains(b)) {
            CHECK_FALSE(locks.locked(b));
        }
    }
}

TEST_CASE("lock label structure")
{
    for (int ell = 2; ell <= 4; ++ell) {
        const Modulus m(ell);
        for (int n = 1; n <= 12; ++n) {
            for (const auto& p : oracle::partitions(n)) {
                const auto locks = lock_labels(p, m);
                for (const auto& b : p.boxes()) {
                    if (locks.locked(b) && b.row > 1) {
                        CHECK(locks.locked({b.row - 1, b.col}));
                    }
                    if (locks.at(b) == LockLabel::LockedII) {
                        bool right = false;
                        for (int c = b.col + 1; c <= p.row_length(b.row); ++c) {
                            right = right || locks.at({b.row, c}) == LockLabel::LockedI;
                        }
                        CHECK(right);
                    }
                }
            }
        }
    }
}

TEST_CASE("deregularization is the dominance minimum")
{
    const Modulus three(3);
    CHECK(deregularize(Partition{3, 2, 1}, three) == Partition{2, 1, 1, 1, 1});
    for (int ell = 2; ell <= 4; ++ell) {
        const Modulus m(ell);
        for (int n = 0; n <= 12; ++n) {
            for (const auto& p : oracle::partitions(n)) {
                const auto cls = class_brute(p, ell);
                std::vector<Partition> minima;
                std::vector<Partition> maxima;
                for (const auto& a : cls) {
                    bool low = true;
                    bool high = true;
                    for (const auto& b : cls) {
                        low = low && oracle::dominates(b, a);
                        high = high && oracle::dominates(a, b);
                    }
                    if (low) {
                        minima.push_back(a);
                    }
                    if (high) {
                        maxima.push_back(a);
                    }
                }
                REQUIRE(minima.size() == 1);
                REQUIRE(maxima.size() == 1);
                CHECK(deregularize(p, m) == minima[0]);
                CHECK(regularize(p, m) == maxima[0]);
                if (is_core(p, m)) {
                    CHECK(deregularize(p, m) == p);
                }
            }
        }
    }
}

TEST_CASE("ladder nodes")
{
    const Modulus three(3);
    CHECK(is_ladder_node(Partition{2, 1, 1, 1}, three));
    CHECK_FALSE(is_ladder_node(Partition{2, 2, 1}, three));
    CHECK(is_ladder_node(Partition{}, three));
}

TEST_CASE("L-partitions")
{
    const Modulus three(3);
    CHECK_FALSE(is_L_partition(Partition{2, 2, 1}, three));
    CHECK(is_L_partition(Partition{3}, three));
    CHECK_THROWS_AS(is_L_partition(Partition{1}, Modulus(2)), error);
    // the disjunctive reading rejects (3), yet m(R(3)) = R((3)') holds
    CHECK_FALSE(L_disjunctive(Partition{3}, 3));
    CHECK(mullineux(regularize(Partition{3}, three), three) == regularize(Partition{1, 1, 1}, three));

    for (int n = 0; n <= 15; ++n) {
        for (const auto& p : partitions_of(n)) {
            if (is_jm(p, three)) {
                CHECK(is_L_partition(p, three));
            }
            if (is_core(p, three)) {
                CHECK(is_L_partition(p, three));
            }
        }
    }
}

TEST_CASE("weak ell-partitions")
{
    const Modulus three(3);
    CHECK(is_weak_ell_partition(Partition{2, 2, 1}, three));
    CHECK(deregularize(Partition{2, 2, 1}, three) == Partition{2, 1, 1, 1});
    try {
        is_weak_ell_partition(Partition{2, 2, 2, 1, 1, 1}, three);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_regular);
    }
    for (int ell = 3; ell <= 4; ++ell) {
        const Modulus m(ell);
        for (int n = 0; n <= 12; ++n) {
            for (const auto& p : oracle::partitions(n)) {
                if (!oracle::regular(p, ell)) {
                    continue;
                }
                bool some_jm = false;
                for (const auto& q : class_brute(p, ell)) {
                    some_jm = some_jm || oracle::jm_brute(q, ell);
                }
                CHECK(is_weak_ell_partition(p, m) == some_jm);
                if (is_ell_partition(p, m)) {
                    CHECK(is_weak_ell_partition(p, m));
                }
            }
        }
    }
}

TEST_CASE("Mullineux map")
{
    const Modulus three(3);
    CHECK(mullineux(Partition{}, three) == Partition{});
    CHECK(mullineux(Partition{1}, three) == Partition{1});
    try {
        mullineux(Partition{1, 1, 1}, three);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_regular);
    }
    for (int n = 0; n <= 12; ++n) {
        for (const auto& p : oracle::partitions(n)) {
            if (!oracle::regular(p, 3)) {
                continue;
            }
            const auto img = mullineux(p, three);
            CHECK(mullineux(img, three) == p);
            CHECK(img == mullineux(p, three, ResidueChoice::Largest));
            CHECK(img.size() == p.size());
        }
    }
}
