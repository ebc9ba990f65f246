#pragma once

#include <optional>
#include <vector>

#include "ladder/partition.hpp"

namespace ladder {

// lambda ~ (mu, r, s, rho, sigma): r rows and s columns of step ell-1 wrapped
// around the core mu, then rho_i horizontal hooks on row i (i <= r+1) and
// sigma_j vertical hooks on column j (j <= s+1).
struct JMDecomposition {
    Partition mu;
    int r = 0;
    int s = 0;
    Partition rho;
    Partition sigma;

    friend bool operator==(const JMDecomposition&, const JMDecomposition&) = default;
};

struct FayersWitness {
    BoxPos base;    // ell divides its hook length
    BoxPos rowmate; // same row as base, hook not divisible by ell
    BoxPos colmate; // same column as base, hook not divisible by ell
};

// An ell-core split into its leading step rows/columns and the inner core.
struct CoreSkeleton {
    Partition mu;
    int r = 0;
    int s = 0;
};

bool star_condition(const Partition& lambda, Modulus m);

// Regular, and no non-horizontal removable hook appears after removing any
// sequence of horizontal hooks.
bool is_ell_partition(const Partition& lambda, Modulus m);

std::optional<FayersWitness> fayers_witness(const Partition& lambda, Modulus m);
bool is_jm(const Partition& lambda, Modulus m);

bool is_generalized_ell_partition(const Partition& lambda, Modulus m);

CoreSkeleton core_skeleton(const Partition& core, Modulus m);

JMDecomposition decompose_jm(const Partition& lambda, Modulus m);
Partition compose_jm(const JMDecomposition& dec, Modulus m);

// Number of JM partitions with the given core and weight.
long long count_jm(const Partition& core, int weight, Modulus m);

// The two-term pair count exactly as printed for cores whose inner core is
// empty (for other cores it equals count_jm). Kept to report where the
// printed sum overcounts.
long long count_jm_two_term(const Partition& core, int weight, Modulus m);

std::vector<Partition> enumerate_jm(const Partition& core, int weight, Modulus m);

// Partitions of n with at most max_len parts.
std::vector<Partition> partitions_with_max_length(int n, int max_len);

} // namespace ladder
