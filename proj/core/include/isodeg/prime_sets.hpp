#pragma once

#include "isodeg/fp.hpp"

#include <string>
#include <vector>

namespace isodeg {

enum class PrimeSetRule { Base, UnconditionalUpperBound, ConditionalExact };

const char* prime_set_rule_name(PrimeSetRule r);

// A finite set of primes together with the rule that produced it.
struct PrimeSet {
    std::vector<u64> primes;  // sorted ascending, no duplicates
    PrimeSetRule rule;
    u64 d = 0;  // degree parameter, 0 for the base set

    bool contains(u64 p) const;
};

// {2, 3, 5, 7, 11, 13, 17, 37}: the prime isogeny degrees over Q.
PrimeSet iq1();

// Base set  u  {p <= d-1, p = 1 mod 3}  u  {p <= 3d-1, p = 2 mod 3}.
// An unconditional upper bound for the degree-d prime set.
PrimeSet unconditional_upper_bound(u64 d);

// Base set  u  {p <= d-1}. Exact, assuming every mod-p image outside the base
// set is surjective (Serre uniformity); always flagged as conditional.
PrimeSet conditional_iq(u64 d);

// Primes up to and including n, by sieve.
std::vector<u64> primes_up_to(u64 n);

struct CrossValidateReport {
    u64 primes_checked = 0;
    u64 pairs_checked = 0;
    std::vector<std::string> violations;
};

// For every prime p outside the base set up to p_max and every d <= d_max,
// checks p in unconditional_upper_bound(d) <=> d >= degree_lower_bound(p) and
// p in conditional_iq(d) <=> d >= p+1.
CrossValidateReport cross_validate(u64 d_max, u64 p_max);

}  // namespace isodeg
