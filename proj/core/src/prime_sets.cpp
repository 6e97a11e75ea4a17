#include "isodeg/prime_sets.hpp"

#include "isodeg/degrees.hpp"

#include <algorithm>
#include <stdexcept>

namespace isodeg {

const char* prime_set_rule_name(PrimeSetRule r) {
    switch (r) {
        case PrimeSetRule::Base: return "base";
        case PrimeSetRule::UnconditionalUpperBound: return "unconditional-upper-bound";
        case PrimeSetRule::ConditionalExact: return "conditional-exact";
    }
    return "?";
}

bool PrimeSet::contains(u64 p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
}

std::vector<u64> primes_up_to(u64 n) {
    std::vector<u64> out;
    if (n < 2) return out;
    std::vector<char> composite(n + 1, 0);
    for (u64 i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= n; j += i) composite[j] = 1;
    }
    return out;
}

PrimeSet iq1() { return {iq1_primes(), PrimeSetRule::Base, 0}; }

namespace {

PrimeSet with_rule(std::vector<u64> primes, PrimeSetRule rule, u64 d) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return {std::move(primes), rule, d};
}

}  // namespace

PrimeSet unconditional_upper_bound(u64 d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    std::vector<u64> primes = iq1_primes();
    for (u64 p : primes_up_to(3 * d - 1)) {
        if (p % 3 == 1 && p <= d - 1) primes.push_back(p);
        if (p % 3 == 2) primes.push_back(p);  // already p <= 3d-1
    }
    return with_rule(std::move(primes), PrimeSetRule::UnconditionalUpperBound, d);
}

PrimeSet conditional_iq(u64 d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    std::vector<u64> primes = iq1_primes();
    for (u64 p : primes_up_to(d - 1)) primes.push_back(p);
    return with_rule(std::move(primes), PrimeSetRule::ConditionalExact, d);
}

CrossValidateReport cross_validate(u64 d_max, u64 p_max) {
    CrossValidateReport report;
    std::vector<PrimeSet> upper, cond;
    upper.reserve(d_max);
    cond.reserve(d_max);
    for (u64 d = 1; d <= d_max; ++d) {
        upper.push_back(unconditional_upper_bound(d));
        cond.push_back(conditional_iq(d));
    }
    for (u64 p : primes_up_to(p_max)) {
        if (in_iq1(p)) continue;
        ++report.primes_checked;
        u64 d_lower = degree_lower_bound(p).d_lower;
        for (u64 d = 1; d <= d_max; ++d) {
            ++report.pairs_checked;
            bool in_upper = upper[d - 1].contains(p);
            if (in_upper != (d >= d_lower))
                report.violations.push_back("p=" + std::to_string(p) + " d=" + std::to_string(d) +
                                            ": upper-bound membership disagrees with d_lower=" +
                                            std::to_string(d_lower));
            bool in_cond = cond[d - 1].contains(p);
            if (in_cond != (d >= p + 1))
                report.violations.push_back("p=" + std::to_string(p) + " d=" + std::to_string(d) +
                                            ": conditional membership disagrees with p+1");
        }
    }
    return report;
}

}  // namespace isodeg
