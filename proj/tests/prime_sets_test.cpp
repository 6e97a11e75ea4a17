#include "isodeg/prime_sets.hpp"

#include <doctest.h>

#include <algorithm>

using namespace isodeg;

TEST_CASE("the base prime set") {
    PrimeSet base = iq1();
    CHECK(base.primes == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 37});
    CHECK(base.contains(37));
    CHECK_FALSE(base.contains(19));
    CHECK(base.primes.size() == 8);
}

TEST_CASE("unconditional upper bound sets") {
    CHECK(unconditional_upper_bound(1).primes == iq1().primes);
    CHECK(unconditional_upper_bound(7).primes == iq1().primes);
    auto d8 = unconditional_upper_bound(8);
    auto expected = iq1().primes;
    expected.push_back(23);
    std::sort(expected.begin(), expected.end());
    CHECK(d8.primes == expected);
}

TEST_CASE("conditional sets") {
    CHECK(conditional_iq(19).primes == iq1().primes);
    auto d20 = conditional_iq(20);
    CHECK(d20.contains(19));
    CHECK(d20.primes.size() == 9);
    auto d24 = conditional_iq(24);
    CHECK(d24.contains(19));
    CHECK(d24.contains(23));
    CHECK(d24.primes.size() == 10);
}

TEST_CASE("first entry thresholds") {
    CHECK_FALSE(unconditional_upper_bound(7).contains(23));
    CHECK(unconditional_upper_bound(8).contains(23));  // (23+1)/3 = 8
    CHECK_FALSE(conditional_iq(19).contains(19));
    CHECK(conditional_iq(20).contains(19));  // 19+1
}

TEST_CASE("monotonicity and containment") {
    for (u64 d = 1; d <= 1000; ++d) {
        auto upper = unconditional_upper_bound(d);
        auto cond = conditional_iq(d);
        // conditional set is inside the unconditional bound
        for (u64 p : cond.primes) CHECK(upper.contains(p));
        if (d > 1) {
            auto prev_u = unconditional_upper_bound(d - 1);
            auto prev_c = conditional_iq(d - 1);
            for (u64 p : prev_u.primes) CHECK(upper.contains(p));
            for (u64 p : prev_c.primes) CHECK(cond.contains(p));
        }
        // the base set is inside everything
        for (u64 p : iq1().primes) {
            CHECK(upper.contains(p));
            CHECK(cond.contains(p));
        }
    }
}

TEST_CASE("cross-validation against per-prime degree bounds") {
    auto report = cross_validate(50, 101);
    CHECK(report.violations.empty());
    CHECK(report.primes_checked == 18);  // primes in (17, 101] except 37, plus 19..; see sweep
    CHECK(report.pairs_checked == report.primes_checked * 50);
}

TEST_CASE("prime sieve") {
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(10) == std::vector<u64>{2, 3, 5, 7});
    CHECK(primes_up_to(23).back() == 23);
}
