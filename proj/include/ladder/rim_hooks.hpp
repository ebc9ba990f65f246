#pragma once

#include <vector>

#include "ladder/partition.hpp"

namespace ladder {

enum class HookShape { Horizontal, Vertical, Neither };

struct RimHook {
    // Ordered along the rim from the northeast end to the southwest end.
    std::vector<BoxPos> boxes;
    HookShape shape = HookShape::Neither;

    BoxPos northeast() const { return boxes.front(); }
    BoxPos southwest() const { return boxes.back(); }

    friend bool operator==(const RimHook&, const RimHook&) = default;
};

struct CoreResult {
    Partition core;
    int weight = 0;
};

// Removable ell-rim hooks, one per box of hook length ell, in order of the
// row of the northeast-most box.
std::vector<RimHook> removable_rim_hooks(const Partition& lambda, Modulus m);

// The hook's length is its box count; throws invalid_hook unless it is one
// of removable_rim_hooks(lambda, hook size).
Partition remove_rim_hook(const Partition& lambda, const RimHook& hook);

// Removes the hook with the topmost northeast box until none remain.
CoreResult ell_core(const Partition& lambda, Modulus m);

bool is_core(const Partition& lambda, Modulus m);

// True iff some box of a shares an edge with some box of b.
bool adjacent(const RimHook& a, const RimHook& b);

} // namespace ladder
