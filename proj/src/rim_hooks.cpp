#include "ladder/rim_hooks.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ladder {

namespace {

HookShape classify(const std::vector<BoxPos>& boxes)
{
    bool one_row = std::all_of(boxes.begin(), boxes.end(),
                               [&](BoxPos b) { return b.row == boxes.front().row; });
    if (one_row) {
        return HookShape::Horizontal;
    }
    bool one_col = std::all_of(boxes.begin(), boxes.end(),
                               [&](BoxPos b) { return b.col == boxes.front().col; });
    return one_col ? HookShape::Vertical : HookShape::Neither;
}

// Rim boxes from (r, lambda_r) down to the foot of column c.
std::vector<BoxPos> rim_walk(const Partition& lambda, int r, int c)
{
    std::vector<BoxPos> out;
    BoxPos at{r, lambda.row_length(r)};
    BoxPos foot{lambda.column_length(c), c};
    out.push_back(at);
    while (at != foot) {
        if (lambda.contains({at.row + 1, at.col})) {
            ++at.row;
        } else {
            --at.col;
        }
        out.push_back(at);
    }
    return out;
}

} // namespace

std::vector<RimHook> removable_rim_hooks(const Partition& lambda, Modulus m)
{
    std::vector<RimHook> out;
    int ell = m.ell();
    for (int r = 1; r <= lambda.length(); ++r) {
        // hook lengths strictly decrease along a row: at most one match
        for (int c = 1; c <= lambda.row_length(r); ++c) {
            if (hook_length(lambda, {r, c}) == ell) {
                auto boxes = rim_walk(lambda, r, c);
                auto shape = classify(boxes);
                out.push_back({std::move(boxes), shape});
                break;
            }
        }
    }
    return out;
}

Partition remove_rim_hook(const Partition& lambda, const RimHook& hook)
{
    int len = static_cast<int>(hook.boxes.size());
    if (len < 2) {
        throw error(errc::invalid_hook, "a rim hook has at least two boxes");
    }
    std::set<BoxPos> wanted(hook.boxes.begin(), hook.boxes.end());
    bool found = false;
    for (const auto& h : removable_rim_hooks(lambda, Modulus(len))) {
        if (std::set<BoxPos>(h.boxes.begin(), h.boxes.end()) == wanted) {
            found = true;
            break;
        }
    }
    if (!found) {
        throw error(errc::invalid_hook, "boxes are not a removable rim hook of the partition");
    }
    std::vector<int> rows = lambda.parts();
    for (const auto& b : hook.boxes) {
        --rows[static_cast<std::size_t>(b.row - 1)];
    }
    return from_row_lengths(std::move(rows));
}

CoreResult ell_core(const Partition& lambda, Modulus m)
{
    CoreResult result{lambda, 0};
    while (true) {
        auto hooks = removable_rim_hooks(result.core, m);
        if (hooks.empty()) {
            return result;
        }
        result.core = remove_rim_hook(result.core, hooks.front());
        ++result.weight;
    }
}

bool is_core(const Partition& lambda, Modulus m)
{
    for (const auto& b : lambda.boxes()) {
        if (hook_length(lambda, b) % m.ell() == 0) {
            return false;
        }
    }
    return true;
}

bool adjacent(const RimHook& a, const RimHook& b)
{
    for (const auto& x : a.boxes) {
        for (const auto& y : b.boxes) {
            if (x == y) {
                throw error(errc::overlapping_hooks, "hooks share a box");
            }
        }
    }
    for (const auto& x : a.boxes) {
        for (const auto& y : b.boxes) {
            int dr = std::abs(x.row - y.row);
            int dc = std::abs(x.col - y.col);
            if (dr + dc == 1) {
                return true;
            }
        }
    }
    return false;
}

} // namespace ladder
