#pragma once

#include <map>
#include <vector>

#include "ladder/partition.hpp"

namespace ladder {

enum class LockLabel { LockedI, LockedII, Unlocked };

// Per-box lock labels of one partition.
class LockMap {
public:
    LockMap() = default;
    explicit LockMap(std::vector<std::vector<LockLabel>> rows) : rows_(std::move(rows)) {}

    LockLabel at(BoxPos b) const;
    bool locked(BoxPos b) const { return at(b) != LockLabel::Unlocked; }
    bool all_locked() const;
    std::vector<BoxPos> locked_boxes() const;
    std::vector<BoxPos> unlocked_boxes() const;

    const std::vector<std::vector<LockLabel>>& rows() const noexcept { return rows_; }

private:
    std::vector<std::vector<LockLabel>> rows_;
};

struct RegClass {
    Partition representative_regular;
    std::vector<Partition> members; // canonical (lexicographic) order
};

// Box counts per ladder, keyed by ladder index.
std::map<int, int> ladder_counts(const Partition& lambda, Modulus m);

Partition regularize(const Partition& lambda, Modulus m);

LockMap lock_labels(const Partition& lambda, Modulus m);

// Slides every unlocked box to the lowest free positions of its ladder.
Partition deregularize(const Partition& lambda, Modulus m);

RegClass reg_class(const Partition& lambda, Modulus m);

// No box with hook length equal to ell times its arm.
bool is_ladder_node(const Partition& lambda, Modulus m);

// No box with ell | h, arm < (ell-1)*leg and leg < (ell-1)*arm.
bool is_L_partition(const Partition& lambda, Modulus m);
// Equivalent form: no box with ell | h and h/ell <= min(arm, leg).
bool is_L_partition_lyle(const Partition& lambda, Modulus m);

// Throws not_regular for non-regular input.
bool is_weak_ell_partition(const Partition& lambda, Modulus m);

enum class ResidueChoice { Smallest, Largest };

Partition mullineux(const Partition& lambda, Modulus m, ResidueChoice choice = ResidueChoice::Smallest);

} // namespace ladder
