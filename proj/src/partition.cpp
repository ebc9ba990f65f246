#include "ladder/partition.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ladder {

const char* to_string(errc code) noexcept
{
    switch (code) {
    case errc::invalid_partition: return "invalid-partition";
    case errc::invalid_modulus: return "invalid-modulus";
    case errc::box_not_in_diagram: return "box-not-in-diagram";
    case errc::invalid_hook: return "invalid-hook";
    case errc::overlapping_hooks: return "overlapping-hooks";
    case errc::modulus_too_small: return "modulus-too-small";
    case errc::not_jm: return "not-jm";
    case errc::invalid_decomposition: return "invalid-decomposition";
    case errc::not_a_core: return "not-a-core";
    case errc::not_regular: return "not-regular";
    case errc::parse_error: return "parse-error";
    case errc::internal: return "internal";
    }
    return "unknown";
}

Modulus::Modulus(int ell)
    : ell_(ell)
{
    if (ell < 2) {
        throw error(errc::invalid_modulus, "ell must be at least 2, got " + std::to_string(ell));
    }
}

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) {
            throw error(errc::invalid_partition, "parts must be positive");
        }
        if (k > 0 && parts_[k] > parts_[k - 1]) {
            throw error(errc::invalid_partition, "parts must be weakly decreasing");
        }
        size_ += parts_[k];
    }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts))
{}

int Partition::row_length(int row) const noexcept
{
    if (row < 1 || row > length()) {
        return 0;
    }
    return parts_[row - 1];
}

int Partition::column_length(int col) const noexcept
{
    if (col < 1) {
        return 0;
    }
    // parts are decreasing, so the rows reaching col form a prefix
    auto it = std::partition_point(parts_.begin(), parts_.end(), [col](int p) { return p >= col; });
    return static_cast<int>(it - parts_.begin());
}

bool Partition::contains(BoxPos b) const noexcept
{
    return b.row >= 1 && b.col >= 1 && b.row <= length() && b.col <= parts_[b.row - 1];
}

std::vector<BoxPos> Partition::boxes() const
{
    std::vector<BoxPos> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int r = 1; r <= length(); ++r) {
        for (int c = 1; c <= parts_[r - 1]; ++c) {
            out.push_back({r, c});
        }
    }
    return out;
}

Partition from_row_lengths(std::vector<int> rows)
{
    while (!rows.empty() && rows.back() == 0) {
        rows.pop_back();
    }
    return Partition(std::move(rows));
}

std::optional<Partition> from_boxes(const std::vector<BoxPos>& boxes)
{
    std::map<int, std::vector<int>> by_row;
    for (const auto& b : boxes) {
        if (b.row < 1 || b.col < 1) {
            return std::nullopt;
        }
        by_row[b.row].push_back(b.col);
    }
    std::vector<int> rows;
    int expected_row = 1;
    for (auto& [row, cols] : by_row) {
        if (row != expected_row++) {
            return std::nullopt;
        }
        std::sort(cols.begin(), cols.end());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (cols[k] != static_cast<int>(k) + 1) {
                return std::nullopt;
            }
        }
        int len = static_cast<int>(cols.size());
        if (!rows.empty() && len > rows.back()) {
            return std::nullopt;
        }
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

Partition transpose(const Partition& lambda)
{
    std::vector<int> cols;
    int first = lambda.row_length(1);
    cols.reserve(static_cast<std::size_t>(first));
    for (int c = 1; c <= first; ++c) {
        cols.push_back(lambda.column_length(c));
    }
    return Partition(std::move(cols));
}

namespace {

void require_box(const Partition& lambda, BoxPos b)
{
    if (!lambda.contains(b)) {
        throw error(errc::box_not_in_diagram,
                    "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")");
    }
}

} // namespace

int arm(const Partition& lambda, BoxPos b)
{
    require_box(lambda, b);
    return lambda.row_length(b.row) - b.col;
}

int leg(const Partition& lambda, BoxPos b)
{
    require_box(lambda, b);
    return lambda.column_length(b.col) - b.row;
}

int hook_length(const Partition& lambda, BoxPos b)
{
    return arm(lambda, b) + leg(lambda, b) + 1;
}

Residue residue(BoxPos b, Modulus m) noexcept
{
    int ell = m.ell();
    return Residue{((b.col - b.row) % ell + ell) % ell};
}

int ladder_index(BoxPos b, Modulus m) noexcept
{
    return b.row + (m.ell() - 1) * (b.col - 1);
}

bool is_regular(const Partition& lambda, Modulus m) noexcept
{
    const auto& p = lambda.parts();
    std::size_t run = 1;
    for (std::size_t k = 1; k < p.size(); ++k) {
        run = (p[k] == p[k - 1]) ? run + 1 : 1;
        if (run >= static_cast<std::size_t>(m.ell())) {
            return false;
        }
    }
    return true;
}

std::vector<BoxPos> addable_boxes(const Partition& lambda)
{
    std::vector<BoxPos> out;
    for (int r = 1; r <= lambda.length() + 1; ++r) {
        int len = lambda.row_length(r);
        if (r == 1 || lambda.row_length(r - 1) > len) {
            out.push_back({r, len + 1});
        }
    }
    return out;
}

std::vector<BoxPos> removable_boxes(const Partition& lambda)
{
    std::vector<BoxPos> out;
    for (int r = 1; r <= lambda.length(); ++r) {
        int len = lambda.row_length(r);
        if (lambda.row_length(r + 1) < len) {
            out.push_back({r, len});
        }
    }
    return out;
}

std::vector<BoxPos> addable_boxes(const Partition& lambda, Residue i, Modulus m)
{
    auto all = addable_boxes(lambda);
    std::erase_if(all, [&](BoxPos b) { return residue(b, m) != i; });
    return all;
}

std::vector<BoxPos> removable_boxes(const Partition& lambda, Residue i, Modulus m)
{
    auto all = removable_boxes(lambda);
    std::erase_if(all, [&](BoxPos b) { return residue(b, m) != i; });
    return all;
}

Partition add_box(const Partition& lambda, BoxPos b)
{
    std::vector<int> rows = lambda.parts();
    if (b.row < 1 || b.row > lambda.length() + 1 || b.col != lambda.row_length(b.row) + 1 ||
        (b.row > 1 && lambda.row_length(b.row - 1) < b.col)) {
        throw error(errc::invalid_partition, "position is not addable");
    }
    if (b.row == lambda.length() + 1) {
        rows.push_back(1);
    } else {
        ++rows[static_cast<std::size_t>(b.row - 1)];
    }
    return Partition(std::move(rows));
}

Partition remove_box(const Partition& lambda, BoxPos b)
{
    if (!lambda.contains(b) || b.col != lambda.row_length(b.row) ||
        lambda.row_length(b.row + 1) >= b.col) {
        throw error(errc::invalid_partition, "box is not removable");
    }
    std::vector<int> rows = lambda.parts();
    --rows[static_cast<std::size_t>(b.row - 1)];
    return from_row_lengths(std::move(rows));
}

Dominance dominance_compare(const Partition& lambda, const Partition& mu) noexcept
{
    if (lambda.size() != mu.size()) {
        return Dominance::Incomparable;
    }
    bool some_less = false;
    bool some_greater = false;
    int sum_l = 0;
    int sum_m = 0;
    int rows = std::max(lambda.length(), mu.length());
    for (int r = 1; r <= rows; ++r) {
        sum_l += lambda.row_length(r);
        sum_m += mu.row_length(r);
        some_less |= sum_l < sum_m;
        some_greater |= sum_l > sum_m;
    }
    if (some_less && some_greater) {
        return Dominance::Incomparable;
    }
    if (some_less) {
        return Dominance::Less;
    }
    if (some_greater) {
        return Dominance::Greater;
    }
    return Dominance::Equal;
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    if (n < 0) {
        return out;
    }
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // standard successor in reverse lexicographic order
    std::vector<int> a{n};
    while (true) {
        out.emplace_back(a);
        int rem = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++rem;
        }
        if (a.empty()) {
            break;
        }
        int v = --a.back();
        ++rem;
        while (rem > v) {
            a.push_back(v);
            rem -= v;
        }
        a.push_back(rem);
    }
    return out;
}

} // namespace ladder

std::size_t std::hash<ladder::Partition>::operator()(const ladder::Partition& p) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : p.parts()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}
