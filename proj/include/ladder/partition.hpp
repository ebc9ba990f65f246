#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <vector>

#include "ladder/error.hpp"

namespace ladder {

// 1-based (row, col) in English notation. Row/column 0 is used only by the
// box-type classification, which treats the boundary as part of the diagram.
struct BoxPos {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const BoxPos&, const BoxPos&) = default;
};

class Modulus {
public:
    explicit Modulus(int ell);

    int ell() const noexcept { return ell_; }

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    int ell_;
};

struct Residue {
    int value = 0;

    friend auto operator<=>(const Residue&, const Residue&) = default;
};

// Weakly decreasing positive parts. Immutable once constructed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    // Length of a 1-based row; 0 beyond the last row.
    int row_length(int row) const noexcept;
    int column_length(int col) const noexcept;

    bool contains(BoxPos b) const noexcept;

    // Boxes in row-major order.
    std::vector<BoxPos> boxes() const;

    // Lexicographic on parts; this is the canonical order for emission.
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Builds a partition from a possibly zero-padded vector of row lengths.
Partition from_row_lengths(std::vector<int> rows);

// Builds a partition from an arbitrary box set; absent if the set is not a
// Young diagram.
std::optional<Partition> from_boxes(const std::vector<BoxPos>& boxes);

Partition transpose(const Partition& lambda);

int arm(const Partition& lambda, BoxPos b);
int leg(const Partition& lambda, BoxPos b);
int hook_length(const Partition& lambda, BoxPos b);

Residue residue(BoxPos b, Modulus m) noexcept;
int ladder_index(BoxPos b, Modulus m) noexcept;

bool is_regular(const Partition& lambda, Modulus m) noexcept;

std::vector<BoxPos> addable_boxes(const Partition& lambda, Residue i, Modulus m);
std::vector<BoxPos> removable_boxes(const Partition& lambda, Residue i, Modulus m);
std::vector<BoxPos> addable_boxes(const Partition& lambda);
std::vector<BoxPos> removable_boxes(const Partition& lambda);

Partition add_box(const Partition& lambda, BoxPos b);
Partition remove_box(const Partition& lambda, BoxPos b);

enum class Dominance { Less, Equal, Greater, Incomparable };

Dominance dominance_compare(const Partition& lambda, const Partition& mu) noexcept;

// All partitions of n in reverse lexicographic order, starting at (n).
std::vector<Partition> partitions_of(int n);

} // namespace ladder

template <>
struct std::hash<ladder::Partition> {
    std::size_t operator()(const ladder::Partition& p) const noexcept;
};
