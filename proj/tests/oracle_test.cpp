#include "isodeg/action.hpp"
#include "isodeg/catalog.hpp"
#include "isodeg/oracle.hpp"

#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>

using namespace isodeg;

TEST_CASE("full GL2 enumeration") {
    CHECK(oracle::enumerate_gl2(5).elements.size() == 480);
    CHECK(oracle::enumerate_gl2(7).elements.size() == 2016);
    CHECK(oracle::enumerate_gl2(11).elements.size() == 13200);
    CHECK_THROWS_AS(oracle::enumerate_gl2(37), std::invalid_argument);
    CHECK_THROWS_AS(oracle::enumerate_gl2(4), std::invalid_argument);
}

TEST_CASE("brute-force orbits") {
    auto gl2 = oracle::enumerate_gl2(5);
    for (const ProjPoint& pt : projective_line(5))
        CHECK(oracle::orbit_bruteforce(gl2.elements, pt).size == 6);
    auto part = oracle::orbit_partition_bruteforce(gl2.elements, 5, Space::NonzeroVectors);
    CHECK(std::accumulate(part.begin(), part.end(), u64{0}) == 24);
}

TEST_CASE("cubed-normalizer orbit partition at p=13 partitions 14") {
    FpElement eps = smallest_nonresidue(13);
    auto entry = cns_plus_power(13, eps, 3);
    auto part = oracle::orbit_partition_bruteforce(entry.group.elements(), 13, Space::ProjectiveLine);
    CHECK(std::accumulate(part.begin(), part.end(), u64{0}) == 14);
}

TEST_CASE("brute-force orbits agree with generator BFS on random pairs") {
    std::mt19937 rng(31);
    int checked = 0;
    while (checked < 200) {
        u64 p = std::vector<u64>{5, 7, 11, 13}[rng() % 4];
        FpElement eps = smallest_nonresidue(p);
        auto cat = full_catalog(p, eps);
        const CatalogEntry& entry = cat[rng() % cat.size()];
        auto line = projective_line(p);
        ProjPoint pt = line[rng() % line.size()];
        auto brute = oracle::orbit_bruteforce(entry.group.elements(), pt);
        auto bfs = orbit(entry.group, pt);
        CHECK(brute.size == bfs.size);
        CHECK(brute.stabilizer_order == bfs.stabilizer_order);
        ++checked;
    }
}

TEST_CASE("set closure matches generator closure") {
    FpElement eps = smallest_nonresidue(7);
    Matrix gen = cartan_matrix(fp2_generator(7, eps));
    auto closed = oracle::close_set({gen});
    CHECK(closed.size() == 48);
    CHECK(Subgroup::from_elements(closed).same_elements(nonsplit_cartan(7, eps).group));
}

TEST_CASE("power set of a cyclic group is already a subgroup") {
    for (u64 p : {5, 7, 13}) {
        auto cns = nonsplit_cartan(p, smallest_nonresidue(p));
        for (u64 a = 1; a <= 6; ++a) {
            auto report = oracle::powerset_vs_generated(cns, a);
            CHECK(report.coincide);
            u64 q = p * p - 1;
            CHECK(report.raw_power_set_size == q / std::gcd(a, q));
        }
    }
}

TEST_CASE("cube set of the normalizer: regression constants") {
    // p = 23: the raw cube set is not a subgroup and its closure is all of
    // Cns+ -- the index-3 subgroup <Cns^3, N(1,0)> is a different group.
    auto r23 = oracle::powerset_vs_generated(
        nonsplit_cartan_normalizer(23, smallest_nonresidue(23)), 3);
    CHECK(r23.raw_power_set_size == 704);
    CHECK(r23.generated_subgroup_order == 1056);
    CHECK_FALSE(r23.coincide);

    // p = 19 (1 mod 3): here the cube set IS the index-3 subgroup.
    auto r19 = oracle::powerset_vs_generated(
        nonsplit_cartan_normalizer(19, smallest_nonresidue(19)), 3);
    CHECK(r19.raw_power_set_size == 240);
    CHECK(r19.generated_subgroup_order == 240);
    CHECK(r19.coincide);
}

TEST_CASE("stabilizer counts agree with orbit-stabilizer") {
    auto gl2 = oracle::enumerate_gl2(7);
    for (const VecPoint& v : nonzero_vectors(7)) {
        u64 stab = oracle::stabilizer_order_bruteforce(gl2.elements, v);
        auto orb = oracle::orbit_bruteforce(gl2.elements, v);
        CHECK(stab * orb.size == gl2.elements.size());
    }
}
