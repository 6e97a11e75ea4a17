#include "isodeg/action.hpp"
#include "isodeg/catalog.hpp"

#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>

using namespace isodeg;

TEST_CASE("projective normalization") {
    CHECK(ProjPoint::from(2, 3, 5) == ProjPoint{1, 4});  // (2:3) = (1:4) mod 5
    CHECK(ProjPoint::from(0, 3, 5) == ProjPoint{0, 1});
    CHECK_THROWS_AS(ProjPoint::from(0, 0, 5), std::invalid_argument);
    CHECK(projective_line(7).size() == 8);
    CHECK(nonzero_vectors(7).size() == 48);
}

TEST_CASE("projective action") {
    for (const ProjPoint& pt : projective_line(11)) CHECK(act_proj(identity(11), pt) == pt);
    // (0 eps / 1 0) swaps (1:0) and (0:1)
    Matrix m(5, 0, 2, 1, 0);
    CHECK(act_proj(m, ProjPoint{1, 0}) == ProjPoint{0, 1});
}

TEST_CASE("action compatibility: act(xy, p) = act(x, act(y, p))") {
    std::mt19937 rng(17);
    u64 p = 11;
    std::uniform_int_distribution<u64> coef(0, p - 1);
    auto rand_mat = [&] {
        for (;;) {
            u64 a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
            if (sub_mod(mul_mod(a, d, p), mul_mod(b, c, p), p) != 0) return Matrix(p, a, b, c, d);
        }
    };
    auto line = projective_line(p);
    std::uniform_int_distribution<std::size_t> pick(0, line.size() - 1);
    for (int i = 0; i < 1000; ++i) {
        Matrix x = rand_mat(), y = rand_mat();
        ProjPoint pt = line[pick(rng)];
        CHECK(act_proj(multiply(x, y), pt) == act_proj(x, act_proj(y, pt)));
        VecPoint v{pt.x, pt.y};
        CHECK(act_vec(multiply(x, y), v) == act_vec(x, act_vec(y, v)));
    }
}

TEST_CASE("orbit sizes") {
    for (const ProjPoint& pt : projective_line(5))
        CHECK(orbit(gl2_full(5).group, pt).size == 6);
    Subgroup cns23 = nonsplit_cartan(23, smallest_nonresidue(23)).group;
    CHECK(orbit(cns23, ProjPoint{1, 7}).size == 24);
    CHECK(orbit(cns23, VecPoint{3, 5}).size == 528);
}

TEST_CASE("minimal orbit sizes") {
    for (u64 p : {5, 7, 11})
        CHECK(min_orbit_size(gl2_full(p).group, Space::ProjectiveLine) == p + 1);
    FpElement e23 = smallest_nonresidue(23);
    CHECK(min_orbit_size(cns_plus_power(23, e23, 3).group, Space::ProjectiveLine) == 8);
    CHECK(min_orbit_size(nonsplit_cartan_normalizer(23, e23).group, Space::ProjectiveLine) == 24);
    CHECK(min_orbit_size(nonsplit_cartan_normalizer(19, smallest_nonresidue(19)).group,
                         Space::ProjectiveLine) == 20);
}

TEST_CASE("stabilizers") {
    Subgroup gl2 = gl2_full(5).group;
    Subgroup stab_line = stabilizer(gl2, ProjPoint{1, 0});
    CHECK(stab_line.order() == 80);
    CHECK(stab_line.same_elements(borel(5).group));
    CHECK(stabilizer(gl2, VecPoint{1, 0}).order() == 20);  // 480 / 24
    // free vector action of Cns: trivial stabilizers
    Subgroup cns = nonsplit_cartan(7, smallest_nonresidue(7)).group;
    for (const VecPoint& v : nonzero_vectors(7)) CHECK(stabilizer(cns, v).order() == 1);
}

TEST_CASE("orbit-stabilizer identity and partition sums") {
    for (u64 p : {5, 7, 13}) {
        FpElement eps = smallest_nonresidue(p);
        for (const CatalogEntry& entry : full_catalog(p, eps)) {
            for (const ProjPoint& pt : projective_line(p)) {
                auto orb = orbit(entry.group, pt);
                CHECK(orb.size * orb.stabilizer_order == entry.group.order());
                CHECK(orb.stabilizer_order == stabilizer(entry.group, pt).order());
            }
            auto proj = orbit_partition(entry.group, Space::ProjectiveLine);
            CHECK(std::accumulate(proj.sizes.begin(), proj.sizes.end(), u64{0}) == p + 1);
            auto vec = orbit_partition(entry.group, Space::NonzeroVectors);
            CHECK(std::accumulate(vec.sizes.begin(), vec.sizes.end(), u64{0}) == p * p - 1);
        }
    }
}

TEST_CASE("orbit partitions are sorted ascending") {
    auto part = orbit_partition(cns_plus_power(23, smallest_nonresidue(23), 3).group,
                                Space::ProjectiveLine);
    CHECK(part.sizes == std::vector<u64>{8, 16});
    CHECK(part.min_size == 8);
}

TEST_CASE("conjugate subgroups have equal minimal orbits") {
    std::mt19937 rng(23);
    for (u64 p : {5, 13, 31}) {
        std::uniform_int_distribution<u64> coef(0, p - 1);
        auto rand_mat = [&] {
            for (;;) {
                u64 a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
                if (sub_mod(mul_mod(a, d, p), mul_mod(b, c, p), p) != 0)
                    return Matrix(p, a, b, c, d);
            }
        };
        Subgroup g = nonsplit_cartan_normalizer(p, smallest_nonresidue(p)).group;
        auto base = orbit_partition(g, Space::ProjectiveLine).sizes;
        for (int i = 0; i < 20; ++i) {
            Subgroup c = conjugate_subgroup(g, rand_mat());
            CHECK(orbit_partition(c, Space::ProjectiveLine).sizes == base);
        }
    }
}
