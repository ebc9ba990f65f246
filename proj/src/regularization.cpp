#include "ladder/regularization.hpp"

#include <algorithm>
#include <set>

#include "ladder/crystal.hpp"
#include "ladder/jm.hpp"

namespace ladder {

LockLabel LockMap::at(BoxPos b) const
{
    if (b.row < 1 || b.row > static_cast<int>(rows_.size())) {
        throw error(errc::box_not_in_diagram, "no lock label for this box");
    }
    const auto& row = rows_[static_cast<std::size_t>(b.row - 1)];
    if (b.col < 1 || b.col > static_cast<int>(row.size())) {
        throw error(errc::box_not_in_diagram, "no lock label for this box");
    }
    return row[static_cast<std::size_t>(b.col - 1)];
}

bool LockMap::all_locked() const
{
    for (const auto& row : rows_) {
        for (auto l : row) {
            if (l == LockLabel::Unlocked) {
                return false;
            }
        }
    }
    return true;
}

std::vector<BoxPos> LockMap::locked_boxes() const
{
    std::vector<BoxPos> out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (rows_[r][c] != LockLabel::Unlocked) {
                out.push_back({static_cast<int>(r) + 1, static_cast<int>(c) + 1});
            }
        }
    }
    return out;
}

std::vector<BoxPos> LockMap::unlocked_boxes() const
{
    std::vector<BoxPos> out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (rows_[r][c] == LockLabel::Unlocked) {
                out.push_back({static_cast<int>(r) + 1, static_cast<int>(c) + 1});
            }
        }
    }
    return out;
}

namespace {

// Positions of ladder k from the bottom (column 1) upwards.
std::vector<BoxPos> ladder_positions(int k, Modulus m)
{
    std::vector<BoxPos> out;
    const int step = m.ell() - 1;
    for (int c = 1; k - step * (c - 1) >= 1; ++c) {
        out.push_back({k - step * (c - 1), c});
    }
    return out;
}

Partition assemble(const std::vector<BoxPos>& boxes, const char* what)
{
    auto p = from_boxes(boxes);
    if (!p) {
        throw error(errc::internal, what);
    }
    return *p;
}

} // namespace

std::map<int, int> ladder_counts(const Partition& lambda, Modulus m)
{
    std::map<int, int> counts;
    for (const auto& b : lambda.boxes()) {
        ++counts[ladder_index(b, m)];
    }
    return counts;
}

Partition regularize(const Partition& lambda, Modulus m)
{
    std::vector<BoxPos> boxes;
    for (const auto& [k, n] : ladder_counts(lambda, m)) {
        auto pos = ladder_positions(k, m);
        for (int t = 0; t < n; ++t) {
            boxes.push_back(pos[pos.size() - 1 - static_cast<std::size_t>(t)]);
        }
    }
    return assemble(boxes, "regularization produced a non-partition");
}

LockMap lock_labels(const Partition& lambda, Modulus m)
{
    const int step = m.ell() - 1;
    std::vector<std::vector<LockLabel>> rows;
    for (int a = 1; a <= lambda.length(); ++a) {
        const int len = lambda.row_length(a);
        std::vector<LockLabel> row(static_cast<std::size_t>(len), LockLabel::Unlocked);
        int rightmost_locked = 0;
        for (int b = 1; b <= len; ++b) {
            bool above = a == 1 || rows[static_cast<std::size_t>(a - 2)][static_cast<std::size_t>(b - 1)]
                                       != LockLabel::Unlocked;
            if (!above) {
                continue;
            }
            bool gaps_ok = true;
            for (int t = 1; b - t >= 1 && gaps_ok; ++t) {
                BoxPos p{a + step * t, b - t};
                if (!lambda.contains(p) && lambda.contains({p.row - 1, p.col})) {
                    gaps_ok = false;
                }
            }
            if (gaps_ok) {
                row[static_cast<std::size_t>(b - 1)] = LockLabel::LockedI;
                rightmost_locked = b;
            }
        }
        for (int b = 1; b < rightmost_locked; ++b) {
            auto& l = row[static_cast<std::size_t>(b - 1)];
            if (l == LockLabel::Unlocked) {
                l = LockLabel::LockedII;
            }
        }
        rows.push_back(std::move(row));
    }
    return LockMap(std::move(rows));
}

Partition deregularize(const Partition& lambda, Modulus m)
{
    const auto locks = lock_labels(lambda, m);
    std::map<int, std::set<BoxPos>> locked_by_ladder;
    std::map<int, int> unlocked_by_ladder;
    for (const auto& b : lambda.boxes()) {
        int k = ladder_index(b, m);
        if (locks.locked(b)) {
            locked_by_ladder[k].insert(b);
        } else {
            ++unlocked_by_ladder[k];
        }
    }
    std::vector<BoxPos> boxes;
    for (const auto& [k, set] : locked_by_ladder) {
        boxes.insert(boxes.end(), set.begin(), set.end());
    }
    for (const auto& [k, n] : unlocked_by_ladder) {
        const auto& fixed = locked_by_ladder[k];
        int left = n;
        for (const auto& p : ladder_positions(k, m)) {
            if (left == 0) {
                break;
            }
            if (!fixed.contains(p)) {
                boxes.push_back(p);
                --left;
            }
        }
    }
    auto result = assemble(boxes, "deregularization produced a non-partition");
    if (!lock_labels(result, m).all_locked()) {
        throw error(errc::internal, "deregularization left an unlocked box");
    }
    return result;
}

RegClass reg_class(const Partition& lambda, Modulus m)
{
    const auto target = ladder_counts(lambda, m);
    RegClass out{regularize(lambda, m), {}};
    for (auto& mu : partitions_of(lambda.size())) {
        if (ladder_counts(mu, m) == target) {
            out.members.push_back(std::move(mu));
        }
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

bool is_ladder_node(const Partition& lambda, Modulus m)
{
    for (const auto& b : lambda.boxes()) {
        if (hook_length(lambda, b) == m.ell() * arm(lambda, b)) {
            return false;
        }
    }
    return true;
}

namespace {

void require_ell3(Modulus m)
{
    if (m.ell() < 3) {
        throw error(errc::modulus_too_small, "this operation needs ell >= 3");
    }
}

} // namespace

bool is_L_partition(const Partition& lambda, Modulus m)
{
    require_ell3(m);
    const int e = m.ell();
    for (const auto& b : lambda.boxes()) {
        const int h = hook_length(lambda, b);
        const int a = arm(lambda, b);
        const int l = leg(lambda, b);
        // both inequalities: the disjunction would reject every row (ell)
        if (h % e == 0 && a < (e - 1) * l && l < (e - 1) * a) {
            return false;
        }
    }
    return true;
}

bool is_L_partition_lyle(const Partition& lambda, Modulus m)
{
    require_ell3(m);
    const int e = m.ell();
    for (const auto& b : lambda.boxes()) {
        const int h = hook_length(lambda, b);
        if (h % e == 0 && h / e <= std::min(arm(lambda, b), leg(lambda, b))) {
            return false;
        }
    }
    return true;
}

bool is_weak_ell_partition(const Partition& lambda, Modulus m)
{
    require_ell3(m);
    if (!is_regular(lambda, m)) {
        throw error(errc::not_regular, "weak ell-partitions are ell-regular by definition");
    }
    return is_jm(deregularize(lambda, m), m);
}

Partition mullineux(const Partition& lambda, Modulus m, ResidueChoice choice)
{
    require_ell3(m);
    if (!is_regular(lambda, m)) {
        throw error(errc::not_regular, "the Mullineux map is defined on ell-regular partitions");
    }
    if (lambda.empty()) {
        return lambda;
    }
    const int e = m.ell();
    int pick = -1;
    for (int t = 0; t < e; ++t) {
        int i = choice == ResidueChoice::Smallest ? t : e - 1 - t;
        if (epsilon(lambda, Residue{i}, m) > 0) {
            pick = i;
            break;
        }
    }
    if (pick < 0) {
        throw error(errc::internal, "nonempty regular partition with no good box");
    }
    auto lowered = e_tilde(lambda, Residue{pick}, m);
    auto image = mullineux(*lowered, m, choice);
    auto raised = f_tilde(image, Residue{(e - pick) % e}, m);
    if (!raised) {
        throw error(errc::internal, "Mullineux step has no cogood box");
    }
    return *raised;
}

} // namespace ladder
