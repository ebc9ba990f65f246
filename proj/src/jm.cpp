#include "ladder/jm.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "ladder/rim_hooks.hpp"

namespace ladder {

namespace {

void require_jm_modulus(Modulus m)
{
    if (m.ell() < 3) {
        throw error(errc::modulus_too_small, "JM operations need ell >= 3");
    }
}

// hooks[r-1][c-1]
std::vector<std::vector<int>> hook_grid(const Partition& lambda)
{
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(lambda.length()));
    for (int r = 1; r <= lambda.length(); ++r) {
        auto& row = grid[static_cast<std::size_t>(r - 1)];
        for (int c = 1; c <= lambda.row_length(r); ++c) {
            row.push_back(lambda.row_length(r) - c + lambda.column_length(c) - r + 1);
        }
    }
    return grid;
}

// Memo tables live for one top-level call.
class HorizontalClosure {
public:
    explicit HorizontalClosure(Modulus m) : m_(m) {}

    bool operator()(const Partition& lambda)
    {
        if (auto it = memo_.find(lambda); it != memo_.end()) {
            return it->second;
        }
        bool ok = true;
        auto hooks = removable_rim_hooks(lambda, m_);
        for (const auto& h : hooks) {
            if (h.shape != HookShape::Horizontal) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (const auto& h : hooks) {
                if (!(*this)(remove_rim_hook(lambda, h))) {
                    ok = false;
                    break;
                }
            }
        }
        memo_.emplace(lambda, ok);
        return ok;
    }

private:
    Modulus m_;
    std::unordered_map<Partition, bool> memo_;
};

class GeneralizedSearch {
public:
    explicit GeneralizedSearch(Modulus m) : m_(m) {}

    bool operator()(const Partition& lambda)
    {
        if (auto it = memo_.find(lambda); it != memo_.end()) {
            return it->second;
        }
        bool ok = locally_ok(lambda);
        if (ok) {
            for (const auto& h : removable_rim_hooks(lambda, m_)) {
                if (!(*this)(remove_rim_hook(lambda, h))) {
                    ok = false;
                    break;
                }
            }
        }
        memo_.emplace(lambda, ok);
        return ok;
    }

private:
    bool locally_ok(const Partition& lambda) const
    {
        auto hooks = removable_rim_hooks(lambda, m_);
        for (const auto& outer : hooks) {
            if (outer.shape == HookShape::Neither) {
                return false;
            }
        }
        for (const auto& outer : hooks) {
            auto opposite = outer.shape == HookShape::Vertical ? HookShape::Horizontal
                                                                : HookShape::Vertical;
            for (const auto& inner : removable_rim_hooks(remove_rim_hook(lambda, outer), m_)) {
                if (inner.shape == opposite && adjacent(outer, inner)) {
                    return false;
                }
            }
        }
        return true;
    }

    Modulus m_;
    std::unordered_map<Partition, bool> memo_;
};

// Leading rows of lambda whose successive differences equal step.
int leading_steps(const Partition& lambda, int step)
{
    int k = 0;
    while (lambda.row_length(k + 1) - lambda.row_length(k + 2) == step) {
        ++k;
    }
    return k;
}

// Prepends `count` rows, each `step` longer than the one below it.
std::vector<int> stack_rows(std::vector<int> rows, int count, int step)
{
    for (int k = 0; k < count; ++k) {
        int top = rows.empty() ? 0 : rows.front();
        rows.insert(rows.begin(), top + step);
    }
    return rows;
}

std::vector<int> padded(const Partition& p, int len)
{
    std::vector<int> v = p.parts();
    if (static_cast<int>(v.size()) < len) {
        v.resize(static_cast<std::size_t>(len), 0);
    }
    return v;
}

// Number of partitions of n with at most len parts, for n <= max_n.
std::vector<long long> bounded_partition_counts(int max_n, int len)
{
    std::vector<long long> counts(static_cast<std::size_t>(max_n + 1), 0);
    counts[0] = 1;
    // partitions with at most len parts = partitions with parts of size <= len
    for (int part = 1; part <= len; ++part) {
        for (int n = part; n <= max_n; ++n) {
            counts[static_cast<std::size_t>(n)] += counts[static_cast<std::size_t>(n - part)];
        }
    }
    return counts;
}

long long pair_count(int weight, int len_a, int len_b)
{
    if (len_a < 0 || len_b < 0) {
        return 0;
    }
    auto a = bounded_partition_counts(weight, len_a);
    auto b = bounded_partition_counts(weight, len_b);
    long long total = 0;
    for (int k = 0; k <= weight; ++k) {
        total += a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(weight - k)];
    }
    return total;
}

void require_core(const Partition& core, Modulus m)
{
    if (!is_core(core, m)) {
        throw error(errc::not_a_core, "partition is not an ell-core");
    }
}

} // namespace

bool star_condition(const Partition& lambda, Modulus m)
{
    auto grid = hook_grid(lambda);
    for (int c = 1; c <= lambda.row_length(1); ++c) {
        int divisible = 0;
        int height = lambda.column_length(c);
        for (int r = 1; r <= height; ++r) {
            if (grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] % m.ell() == 0) {
                ++divisible;
            }
        }
        if (divisible != 0 && divisible != height) {
            return false;
        }
    }
    return true;
}

bool is_ell_partition(const Partition& lambda, Modulus m)
{
    if (!is_regular(lambda, m)) {
        return false;
    }
    HorizontalClosure closed(m);
    return closed(lambda);
}

std::optional<FayersWitness> fayers_witness(const Partition& lambda, Modulus m)
{
    require_jm_modulus(m);
    auto grid = hook_grid(lambda);
    auto hook = [&](int r, int c) {
        return grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
    };
    int ell = m.ell();
    for (int a = 1; a <= lambda.length(); ++a) {
        for (int b = 1; b <= lambda.row_length(a); ++b) {
            if (hook(a, b) % ell != 0) {
                continue;
            }
            int y = 0;
            for (int c = 1; c <= lambda.row_length(a); ++c) {
                if (hook(a, c) % ell != 0) {
                    y = c;
                    break;
                }
            }
            int x = 0;
            for (int r = 1; r <= lambda.column_length(b); ++r) {
                if (hook(r, b) % ell != 0) {
                    x = r;
                    break;
                }
            }
            if (y != 0 && x != 0) {
                return FayersWitness{{a, b}, {a, y}, {x, b}};
            }
        }
    }
    return std::nullopt;
}

bool is_jm(const Partition& lambda, Modulus m)
{
    return !fayers_witness(lambda, m).has_value();
}

bool is_generalized_ell_partition(const Partition& lambda, Modulus m)
{
    require_jm_modulus(m);
    GeneralizedSearch search(m);
    return search(lambda);
}

CoreSkeleton core_skeleton(const Partition& core, Modulus m)
{
    require_core(core, m);
    int step = m.ell() - 1;
    CoreSkeleton sk;
    sk.r = leading_steps(core, step);
    sk.s = leading_steps(transpose(core), step);
    std::vector<int> inner;
    for (int row = sk.r + 1; row <= core.length(); ++row) {
        int len = core.row_length(row) - sk.s;
        if (len > 0) {
            inner.push_back(len);
        }
    }
    sk.mu = Partition(std::move(inner));
    return sk;
}

Partition compose_jm(const JMDecomposition& dec, Modulus m)
{
    require_jm_modulus(m);
    int ell = m.ell();
    const auto& mu = dec.mu;
    auto invalid = [](const std::string& why) { return error(errc::invalid_decomposition, why); };
    if (dec.r < 0 || dec.s < 0) {
        throw invalid("r and s must be non-negative");
    }
    if (!is_core(mu, m)) {
        throw invalid("mu is not an ell-core");
    }
    if (mu.row_length(1) - mu.row_length(2) >= ell - 1 ||
        mu.column_length(1) - mu.column_length(2) >= ell - 1) {
        throw invalid("mu must have first-row and first-column steps below ell-1");
    }
    if (dec.rho.length() > dec.r + 1 || dec.sigma.length() > dec.s + 1) {
        throw invalid("rho needs length <= r+1 and sigma length <= s+1");
    }
    if (mu.empty() && dec.rho.row_length(dec.r + 1) > 0 && dec.sigma.row_length(dec.s + 1) > 0) {
        throw invalid("with empty mu, rho_{r+1} or sigma_{s+1} must be zero");
    }

    std::vector<int> rows = stack_rows(mu.parts(), dec.r, ell - 1);
    std::vector<int> cols = stack_rows(transpose(from_row_lengths(rows)).parts(), dec.s, ell - 1);
    rows = transpose(from_row_lengths(cols)).parts();

    if (static_cast<int>(rows.size()) < dec.r + 1) {
        rows.resize(static_cast<std::size_t>(dec.r + 1), 0);
    }
    for (int i = 1; i <= dec.rho.length(); ++i) {
        rows[static_cast<std::size_t>(i - 1)] += dec.rho.row_length(i) * ell;
    }
    cols = padded(transpose(from_row_lengths(rows)), dec.s + 1);
    for (int j = 1; j <= dec.sigma.length(); ++j) {
        cols[static_cast<std::size_t>(j - 1)] += dec.sigma.row_length(j) * ell;
    }
    try {
        return transpose(from_row_lengths(cols));
    } catch (const error&) {
        throw invalid("hooks do not assemble into a partition");
    }
}

JMDecomposition decompose_jm(const Partition& lambda, Modulus m)
{
    if (!is_jm(lambda, m)) {
        throw error(errc::not_jm, "partition is not an (ell,0)-JM partition");
    }
    std::vector<int> rho;
    std::vector<int> sigma;
    auto bump = [](std::vector<int>& v, int index) {
        if (static_cast<int>(v.size()) < index) {
            v.resize(static_cast<std::size_t>(index), 0);
        }
        ++v[static_cast<std::size_t>(index - 1)];
    };

    Partition current = lambda;
    while (true) {
        auto hooks = removable_rim_hooks(current, m);
        if (hooks.empty()) {
            break;
        }
        // hooks come sorted by row, so the first horizontal one is topmost
        auto horizontal = std::find_if(hooks.begin(), hooks.end(),
                                       [](const RimHook& h) { return h.shape == HookShape::Horizontal; });
        if (horizontal != hooks.end()) {
            bump(rho, horizontal->northeast().row);
            current = remove_rim_hook(current, *horizontal);
            continue;
        }
        const RimHook* leftmost = nullptr;
        for (const auto& h : hooks) {
            if (h.shape == HookShape::Vertical && (!leftmost || h.northeast().col < leftmost->northeast().col)) {
                leftmost = &h;
            }
        }
        if (!leftmost) {
            throw error(errc::internal, "JM partition exposed a non-straight rim hook");
        }
        bump(sigma, leftmost->northeast().col);
        current = remove_rim_hook(current, *leftmost);
    }

    auto sk = core_skeleton(current, m);
    JMDecomposition dec;
    dec.mu = sk.mu;
    dec.r = sk.r;
    dec.s = sk.s;
    try {
        dec.rho = from_row_lengths(rho);
        dec.sigma = from_row_lengths(sigma);
    } catch (const error&) {
        throw error(errc::internal, "hook counts are not partitions");
    }
    if (dec.rho.length() > dec.r + 1 || dec.sigma.length() > dec.s + 1 || compose_jm(dec, m) != lambda) {
        throw error(errc::internal, "decomposition does not reassemble the input");
    }
    return dec;
}

long long count_jm(const Partition& core, int weight, Modulus m)
{
    require_jm_modulus(m);
    auto sk = core_skeleton(core, m);
    if (weight < 0) {
        return 0;
    }
    if (core.row_length(sk.r + 1) > sk.s) {
        return pair_count(weight, sk.r + 1, sk.s + 1);
    }
    // rho_{r+1} = 0 or sigma_{s+1} = 0; the pairs with both zero sit in
    // both terms and are counted once.
    return pair_count(weight, sk.r + 1, sk.s) + pair_count(weight, sk.r, sk.s + 1) -
           pair_count(weight, sk.r, sk.s);
}

long long count_jm_two_term(const Partition& core, int weight, Modulus m)
{
    require_jm_modulus(m);
    auto sk = core_skeleton(core, m);
    if (weight < 0) {
        return 0;
    }
    if (core.row_length(sk.r + 1) > sk.s) {
        return pair_count(weight, sk.r + 1, sk.s + 1);
    }
    return pair_count(weight, sk.r + 1, sk.s) + pair_count(weight, sk.r, sk.s + 1);
}

std::vector<Partition> partitions_with_max_length(int n, int max_len)
{
    auto all = partitions_of(n);
    std::erase_if(all, [max_len](const Partition& p) { return p.length() > max_len; });
    return all;
}

std::vector<Partition> enumerate_jm(const Partition& core, int weight, Modulus m)
{
    require_jm_modulus(m);
    auto sk = core_skeleton(core, m);
    std::vector<Partition> out;
    for (int k = 0; k <= weight; ++k) {
        for (const auto& rho : partitions_with_max_length(k, sk.r + 1)) {
            for (const auto& sigma : partitions_with_max_length(weight - k, sk.s + 1)) {
                if (sk.mu.empty() && rho.row_length(sk.r + 1) > 0 && sigma.row_length(sk.s + 1) > 0) {
                    continue;
                }
                auto lambda = compose_jm({sk.mu, sk.r, sk.s, rho, sigma}, m);
                if (!is_jm(lambda, m)) {
                    throw error(errc::internal, "composed partition failed the JM test");
                }
                out.push_back(std::move(lambda));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ladder
