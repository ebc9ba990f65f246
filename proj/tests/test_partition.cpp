#include <doctest.h>

#include "ladder/io.hpp"
#include "ladder/partition.hpp"
#include "oracles.hpp"

using namespace ladder;

TEST_CASE("partition construction and validation")
{
    CHECK(Partition{}.empty());
    CHECK(Partition{3, 2, 2}.size() == 7);
    CHECK_THROWS_AS(Partition({1, 2}), error);
    CHECK_THROWS_AS(Partition({2, 0}), error);
    try {
        Partition({1, 2});
    } catch (const error& e) {
        CHECK(e.code() == errc::invalid_partition);
    }
    CHECK(from_row_lengths({3, 1, 0, 0}) == Partition{3, 1});
    CHECK_THROWS_AS(Modulus(1), error);
}

TEST_CASE("transpose")
{
    CHECK(transpose(Partition{5, 4, 1}) == Partition{3, 2, 2, 2, 1});
    CHECK(transpose(Partition{}) == Partition{});
    CHECK(transpose(Partition{3, 3, 1}) == Partition{3, 2, 2});
    for (int n = 0; n <= 10; ++n) {
        for (const auto& p : oracle::partitions(n)) {
            CHECK(transpose(transpose(p)) == p);
        }
    }
}

TEST_CASE("arm, leg and hook length")
{
    const Partition big{10, 8, 3, 2, 2, 1, 1, 1, 1, 1};
    CHECK(arm(big, {1, 1}) == 9);
    CHECK(leg(big, {1, 1}) == 9);
    CHECK(hook_length(big, {1, 1}) == 19);
    CHECK(hook_length(big, {2, 2}) == 10);
    CHECK(arm(Partition{6, 4}, {1, 2}) == 4);
    CHECK(leg(Partition{6, 4}, {1, 2}) == 1);
    CHECK(hook_length(Partition{1}, {1, 1}) == 1);
    CHECK_THROWS_AS(arm(Partition{1}, {1, 2}), error);

    for (int n = 1; n <= 10; ++n) {
        for (const auto& p : oracle::partitions(n)) {
            const auto t = transpose(p);
            for (const auto& b : p.boxes()) {
                CHECK(hook_length(p, b) == arm(p, b) + leg(p, b) + 1);
                CHECK(hook_length(p, b) == hook_length(t, {b.col, b.row}));
            }
        }
    }
}

TEST_CASE("residues and ladders")
{
    const Modulus three(3);
    CHECK(residue({2, 5}, three).value == 0);
    CHECK(residue({1, 1}, Modulus(7)).value == 0);
    CHECK(residue({5, 1}, three).value == 2);
    CHECK(ladder_index({1, 2}, three) == 3);
    CHECK(ladder_index({3, 1}, three) == 3);
    CHECK(ladder_index({2, 4}, three) == 8);
    CHECK(ladder_index({8, 1}, three) == 8);
    for (int ell = 2; ell <= 5; ++ell) {
        const Modulus m(ell);
        for (int r = 1; r <= 12; ++r) {
            for (int c = 1; c <= 12; ++c) {
                const int k = ladder_index({r, c}, m);
                CHECK(residue({r, c}, m).value == (((1 - k) % ell) + ell) % ell);
                CHECK(residue({k, 1}, m) == residue({r, c}, m));
            }
        }
    }
}

TEST_CASE("regularity")
{
    const Modulus three(3);
    CHECK_FALSE(is_regular(Partition{2, 2, 2, 1, 1, 1}, three));
    CHECK(is_regular(Partition{3, 3, 2, 1}, three));
    CHECK(is_regular(Partition{}, three));
    for (int ell = 2; ell <= 5; ++ell) {
        for (int n = 0; n <= 12; ++n) {
            for (const auto& p : oracle::partitions(n)) {
                CHECK(is_regular(p, Modulus(ell)) == oracle::regular(p, ell));
            }
        }
    }
}

TEST_CASE("addable and removable boxes")
{
    const Modulus three(3);
    const Partition p{8, 5, 4, 1};
    CHECK(addable_boxes(p, Residue{2}, three) == std::vector<BoxPos>{{1, 9}, {3, 5}, {5, 1}});
    CHECK(addable_boxes(Partition{}, Residue{0}, three) == std::vector<BoxPos>{{1, 1}});
    CHECK(addable_boxes(p, Residue{0}, three).empty());
    CHECK(removable_boxes(p, Residue{0}, three) == std::vector<BoxPos>{{2, 5}, {4, 1}});
    CHECK(removable_boxes(Partition{}, Residue{0}, three).empty());
    CHECK(removable_boxes(p, Residue{2}, three).empty());

    for (int n = 0; n <= 9; ++n) {
        for (const auto& q : oracle::partitions(n)) {
            std::size_t add = 0;
            std::size_t rem = 0;
            for (int i = 0; i < 3; ++i) {
                add += addable_boxes(q, Residue{i}, three).size();
                rem += removable_boxes(q, Residue{i}, three).size();
            }
            CHECK(add == addable_boxes(q).size());
            CHECK(rem == removable_boxes(q).size());
            for (const auto& b : addable_boxes(q)) {
                CHECK(add_box(q, b).size() == n + 1);
            }
            for (const auto& b : removable_boxes(q)) {
                CHECK(remove_box(q, b).size() == n - 1);
            }
        }
    }
    CHECK_THROWS_AS(add_box(p, {1, 10}), error);
    CHECK_THROWS_AS(remove_box(p, {1, 1}), error);
}

TEST_CASE("dominance")
{
    CHECK(dominance_compare(Partition{2, 2, 2, 1, 1, 1}, Partition{3, 3, 2, 1}) == Dominance::Less);
    CHECK(dominance_compare(Partition{3, 3, 2, 1}, Partition{2, 2, 2, 1, 1, 1}) == Dominance::Greater);
    CHECK(dominance_compare(Partition{3, 1}, Partition{3, 1}) == Dominance::Equal);
    CHECK(dominance_compare(Partition{3, 1, 1, 1}, Partition{2, 2, 2}) == Dominance::Incomparable);
    CHECK(dominance_compare(Partition{3}, Partition{2}) == Dominance::Incomparable);

    for (int n = 0; n <= 8; ++n) {
        const auto ps = oracle::partitions(n);
        for (const auto& a : ps) {
            for (const auto& b : ps) {
                const bool ab = oracle::dominates(a, b);
                const bool ba = oracle::dominates(b, a);
                const auto d = dominance_compare(a, b);
                if (ab && ba) {
                    CHECK(d == Dominance::Equal);
                } else if (ab) {
                    CHECK(d == Dominance::Greater);
                } else if (ba) {
                    CHECK(d == Dominance::Less);
                } else {
                    CHECK(d == Dominance::Incomparable);
                }
            }
        }
    }
}

TEST_CASE("partition enumeration")
{
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(4).front() == Partition{4});
    const long long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231};
    for (int n = 0; n <= 16; ++n) {
        auto mine = partitions_of(n);
        CHECK(static_cast<long long>(mine.size()) == expected[n]);
        auto ref = oracle::partitions(n);
        std::sort(mine.begin(), mine.end());
        std::sort(ref.begin(), ref.end());
        CHECK(mine == ref);
    }
}

TEST_CASE("from_boxes")
{
    CHECK(from_boxes({{1, 1}, {1, 2}, {2, 1}}) == Partition{2, 1});
    CHECK_FALSE(from_boxes({{1, 1}, {2, 2}}).has_value());
    CHECK(from_boxes({}) == Partition{});
}

TEST_CASE("partition text")
{
    CHECK(parse_partition("10,8,3,2^2,1^5") == Partition{10, 8, 3, 2, 2, 1, 1, 1, 1, 1});
    CHECK(parse_partition("empty") == Partition{});
    CHECK(parse_partition(" 3, 1 ") == Partition{3, 1});
    CHECK(to_string(Partition{3, 2, 2}) == "3,2,2");
    CHECK(to_string(Partition{}) == "empty");
    for (const char* bad : {"", "1,2", "3,,1", "a", "3^0", "0", "-1", "3^x", "2^2^2"}) {
        CAPTURE(bad);
        try {
            parse_partition(bad);
            CHECK(false);
        } catch (const error& e) {
            CHECK(e.code() == errc::parse_error);
        }
    }
    for (int n = 0; n <= 8; ++n) {
        for (const auto& p : oracle::partitions(n)) {
            CHECK(parse_partition(to_string(p)) == p);
        }
    }
}
