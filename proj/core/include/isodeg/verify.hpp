#pragma once

#include "isodeg/fp.hpp"

#include <string>
#include <vector>

namespace isodeg {
namespace verify {

struct CheckResult {
    std::string name;
    bool pass = true;
    u64 cases = 0;
    std::vector<std::string> failures;  // capped; empty when pass

    void fail(std::string msg);
};

// Catalog and oracle orders agree with the closed-form formulas and with each
// other, and closure(Cns generator) equals the by-shape enumeration.
CheckResult check_order_formulas(u64 p_max);

// Generator-BFS orbit partitions and stabilizer orders equal the oracle's
// full-enumeration versions for every catalog kind.
CheckResult check_oracle_equivalence(u64 p_max);

// [Stab(C) : Stab(P)] divides p-1 for every catalog subgroup and vector P.
CheckResult check_stabilizer_divisibility(u64 p_max);

// Minimal vector-orbit of C_ns^a is (p^2-1)/gcd(a, p^2-1) >= (p^2-1)/a.
CheckResult check_vector_orbit_bound(u64 p_max);

// Orders and sorted orbit multisets are identical for two non-residue choices.
CheckResult check_epsilon_invariance(u64 p_max);

// min_orbit(GL2, P^1) = p+1; for p <= 31 the stabilizer of the standard line
// equals the Borel entry element-for-element.
CheckResult check_line_stabilizer(u64 p_max);

// d_lower >= 8 outside the base set, with the exact per-residue values.
CheckResult check_degree_sweep(u64 p_max);

// Prime-set identities plus cross-validation against per-prime degrees.
CheckResult check_set_identities(u64 d_max, u64 p_max);

// The full battery. Oracle-backed checks run up to min(p_max, 31) and are
// dropped entirely with skip_oracle.
std::vector<CheckResult> run_all(u64 p_max, u64 d_max, bool skip_oracle);

}  // namespace verify
}  // namespace isodeg
