#include "isodeg/degrees.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace isodeg;

TEST_CASE("allowed image classes split on p mod 3") {
    auto im19 = allowed_images(19);  // 19 = 1 mod 3
    REQUIRE(im19.size() == 2);
    CHECK(im19[0].tag == ImageTag::Surjective);
    CHECK(im19[1].tag == ImageTag::CnsPlus);

    auto im23 = allowed_images(23);  // 23 = 2 mod 3
    REQUIRE(im23.size() == 3);
    CHECK(im23[2].tag == ImageTag::CnsPlusCubed);
    CHECK(im23[2].realizing_group.group.order() == 352);
}

TEST_CASE("base-set primes and bad inputs are rejected") {
    CHECK_THROWS_AS(allowed_images(13), std::domain_error);
    CHECK_THROWS_AS(allowed_images(37), std::domain_error);
    CHECK_THROWS_AS(allowed_images(2), std::invalid_argument);
    CHECK_THROWS_AS(allowed_images(21), std::invalid_argument);
    CHECK_THROWS_AS(degree_lower_bound(13), std::domain_error);
}

TEST_CASE("degree lower bounds at desk primes") {
    DegreeReport r19 = degree_lower_bound(19);
    CHECK(r19.d_lower == 20);
    DegreeReport r23 = degree_lower_bound(23);
    CHECK(r23.d_lower == 8);
    // per-image minima at 23: surjective 24, Cns+ 24, index-3 subgroup 8
    REQUIRE(r23.per_image.size() == 3);
    CHECK(r23.per_image[0].min_orbit == 24);
    CHECK(r23.per_image[1].min_orbit == 24);
    CHECK(r23.per_image[2].min_orbit == 8);
    CHECK(degree_lower_bound(43).d_lower == 44);
}

TEST_CASE("d_lower is the minimum over image classes") {
    for (u64 p : {19, 23, 29, 31, 41, 43}) {
        DegreeReport r = degree_lower_bound(p);
        u64 min = r.per_image.front().min_orbit;
        for (const auto& s : r.per_image) min = std::min(min, s.min_orbit);
        CHECK(r.d_lower == min);
        CHECK(r.d_lower * 3 >= p + 1);
        if (p % 3 == 1) CHECK(r.d_lower == p + 1);
    }
}

TEST_CASE("non-additive-reduction bound is p+1") {
    CHECK(nonadditive_bound(19) == 20);
    CHECK(nonadditive_bound(23) == 24);
    for (u64 p : {19, 23, 29, 31, 41, 43, 47, 53})
        CHECK(nonadditive_bound(p) >= degree_lower_bound(p).d_lower);
}

TEST_CASE("point degree bounds from Cartan power vector orbits") {
    CHECK(point_degree_lower_bound(23, 1) == 528);
    CHECK(point_degree_lower_bound(23, 3) == 176);
    CHECK(point_degree_lower_bound(19, 1) == 360);
    CHECK_THROWS_AS(point_degree_lower_bound(23, 7), std::invalid_argument);
}

TEST_CASE("point bound sandwiches the line bound") {
    // (p^2-1)/a <= (p-1) * (line bound (p+1)/a)
    for (u64 p : {19, 23}) {
        for (u64 a : {1, 3}) {
            if (p % 3 == 1 && a == 3) continue;
            u64 point_bound = point_degree_lower_bound(p, a);
            u64 line_bound = a == 1 ? p + 1 : (p + 1) / a;
            CHECK(point_bound <= (p - 1) * line_bound);
        }
    }
}
