#pragma once

#include "isodeg/gl2.hpp"

#include <variant>
#include <vector>

namespace isodeg {

// A point of P^1(F_p): a line through the origin of F_p^2, i.e. a p-isogeny
// kernel. Canonical representative: (1, t) or (0, 1).
struct ProjPoint {
    u64 x = 0, y = 0;

    static ProjPoint from(u64 x, u64 y, u64 p);  // normalizes; rejects (0,0)
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

// A nonzero vector of F_p^2, i.e. a point of order p.
struct VecPoint {
    u64 x = 0, y = 0;

    static VecPoint from(u64 x, u64 y, u64 p);  // reduces; rejects (0,0)
    friend bool operator==(const VecPoint&, const VecPoint&) = default;
};

std::vector<ProjPoint> projective_line(u64 p);   // all p+1 points
std::vector<VecPoint> nonzero_vectors(u64 p);    // all p^2-1 points

ProjPoint act_proj(const Matrix& m, const ProjPoint& pt);
VecPoint act_vec(const Matrix& m, const VecPoint& pt);

enum class Space { ProjectiveLine, NonzeroVectors };

// One orbit of a subgroup, computed by BFS over the generator action.
// stabilizer_order = |G| / size (orbit-stabilizer).
template <typename Point>
struct OrbitOf {
    Point base;
    u64 size = 0;
    std::vector<Point> members;
    u64 stabilizer_order = 0;
};

OrbitOf<ProjPoint> orbit(const Subgroup& g, const ProjPoint& pt);
OrbitOf<VecPoint> orbit(const Subgroup& g, const VecPoint& pt);

// The sizes of all orbits, sorted ascending. They sum to p+1 (projective
// line) or p^2-1 (nonzero vectors).
struct OrbitPartition {
    u64 min_size = 0;
    std::vector<u64> sizes;
};

OrbitPartition orbit_partition(const Subgroup& g, Space space);
u64 min_orbit_size(const Subgroup& g, Space space);

// Explicit stabilizer element sets; these materialize g, so they are meant
// for the small-p range. "Fixes" a ProjPoint means fixes the line.
Subgroup stabilizer(const Subgroup& g, const ProjPoint& pt);
Subgroup stabilizer(const Subgroup& g, const VecPoint& pt);

}  // namespace isodeg
