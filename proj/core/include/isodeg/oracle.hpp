#pragma once

#include "isodeg/action.hpp"
#include "isodeg/catalog.hpp"
#include "isodeg/gl2.hpp"

#include <vector>

namespace isodeg {
namespace oracle {

// Largest prime the full-enumeration oracle accepts. |GL2(F_31)| = 892800.
inline constexpr u64 kMaxPrime = 31;

struct EnumeratedGroup {
    u64 p;
    std::vector<Matrix> elements;
};

// All 2x2 matrices with nonzero determinant, by quadruple loop.
EnumeratedGroup enumerate_gl2(u64 p);

// Shape-level enumerations of the named subgroups, sharing nothing with the
// generator-BFS constructors.
std::vector<Matrix> enumerate_borel(u64 p);
std::vector<Matrix> enumerate_cns(u64 p, u64 epsilon);
std::vector<Matrix> enumerate_cns_plus(u64 p, u64 epsilon);

// Orbit by applying every element of a complete group to the point.
OrbitOf<ProjPoint> orbit_bruteforce(const std::vector<Matrix>& elements, const ProjPoint& pt);
OrbitOf<VecPoint> orbit_bruteforce(const std::vector<Matrix>& elements, const VecPoint& pt);

std::vector<u64> orbit_partition_bruteforce(const std::vector<Matrix>& elements, u64 p,
                                            Space space);  // sorted ascending

u64 stabilizer_order_bruteforce(const std::vector<Matrix>& elements, const ProjPoint& pt);
u64 stabilizer_order_bruteforce(const std::vector<Matrix>& elements, const VecPoint& pt);

// Set closure by repeated set-by-set multiplication (no generator BFS).
std::vector<Matrix> close_set(std::vector<Matrix> elements);

struct PowerSetReport {
    u64 raw_power_set_size;
    u64 generated_subgroup_order;
    bool coincide;
};

// Compares { g^a : g in entry } with the subgroup it generates.
PowerSetReport powerset_vs_generated(const CatalogEntry& entry, u64 a);

}  // namespace oracle
}  // namespace isodeg
