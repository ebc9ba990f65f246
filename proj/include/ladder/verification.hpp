#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ladder/partition.hpp"

namespace ladder {

struct Failure {
    std::string input;
    int residue = -1; // -1 when the check is not per-residue
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string suite;
    int ell = 0;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    long long checks = 0;
    std::vector<Failure> failures;

    bool passed() const noexcept { return failures.empty(); }
    nlohmann::ordered_json to_json() const;
};

// R(f^ i lambda) = f~ i(R lambda), same for e, and matching counters, on every
// ladder-crystal node through depth.
VerificationReport verify_isomorphism(Modulus m, int depth);

// Level sizes and node sets of both crystals, e/f inverse on every edge,
// cores and JM partitions present as ladder nodes.
VerificationReport crystal_structure_suite(Modulus m, int depth);

// String-end theorems for ell-partitions, JM partitions and weak
// ell-partitions; JM and L-partitions are ladder nodes; the Mullineux
// identity on L-partitions.
VerificationReport theorem_suite(Modulus m, int nmax);

// Dominance extremes of every class, idempotence, R.S = R, S.R = S,
// ladder-count preservation, all boxes of S-images locked.
VerificationReport regularization_suite(Modulus m, int nmax);

// Involution, size, regularity, residue-choice independence, per-step
// epsilon symmetry, and m(R lambda) = R(lambda') exactly on L-partitions.
VerificationReport mullineux_suite(Modulus m, int nmax);

// Alternative characterizations agree on every partition of n <= nmax.
VerificationReport equivalence_suite(Modulus m, int nmax);

} // namespace ladder
