#include "isodeg/action.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <vector>

namespace isodeg {

namespace {

// Dense index for BFS bookkeeping.
u64 proj_index(const ProjPoint& pt, u64 p) { return pt.x == 1 ? pt.y : p; }
u64 vec_index(const VecPoint& pt, u64 p) { return pt.x * p + pt.y - 1; }

}  // namespace

ProjPoint ProjPoint::from(u64 x, u64 y, u64 p) {
    x %= p;
    y %= p;
    if (x == 0 && y == 0) throw std::invalid_argument("(0,0) is not a projective point");
    if (x != 0) {
        u64 xi = inv_mod(x, p);
        return {1, mul_mod(y, xi, p)};
    }
    return {0, 1};
}

VecPoint VecPoint::from(u64 x, u64 y, u64 p) {
    x %= p;
    y %= p;
    if (x == 0 && y == 0) throw std::invalid_argument("(0,0) is not a point of order p");
    return {x, y};
}

std::vector<ProjPoint> projective_line(u64 p) {
    std::vector<ProjPoint> pts;
    pts.reserve(p + 1);
    for (u64 t = 0; t < p; ++t) pts.push_back({1, t});
    pts.push_back({0, 1});
    return pts;
}

std::vector<VecPoint> nonzero_vectors(u64 p) {
    std::vector<VecPoint> pts;
    pts.reserve(p * p - 1);
    for (u64 x = 0; x < p; ++x)
        for (u64 y = 0; y < p; ++y)
            if (x || y) pts.push_back({x, y});
    return pts;
}

ProjPoint act_proj(const Matrix& m, const ProjPoint& pt) {
    u64 p = m.p;
    return ProjPoint::from(add_mod(mul_mod(m.m[0], pt.x, p), mul_mod(m.m[1], pt.y, p), p),
                           add_mod(mul_mod(m.m[2], pt.x, p), mul_mod(m.m[3], pt.y, p), p), p);
}

VecPoint act_vec(const Matrix& m, const VecPoint& pt) {
    u64 p = m.p;
    return VecPoint::from(add_mod(mul_mod(m.m[0], pt.x, p), mul_mod(m.m[1], pt.y, p), p),
                          add_mod(mul_mod(m.m[2], pt.x, p), mul_mod(m.m[3], pt.y, p), p), p);
}

namespace {

template <typename Point, typename Act, typename Index>
OrbitOf<Point> orbit_bfs(const Subgroup& g, const Point& start, u64 space_size, Act act,
                         Index index) {
    std::vector<char> seen(space_size, 0);
    OrbitOf<Point> orb;
    orb.base = start;
    std::deque<Point> queue{start};
    seen[index(start)] = 1;
    orb.members.push_back(start);
    while (!queue.empty()) {
        Point v = queue.front();
        queue.pop_front();
        for (const Matrix& m : g.generators()) {
            Point w = act(m, v);
            if (!seen[index(w)]) {
                seen[index(w)] = 1;
                orb.members.push_back(w);
                queue.push_back(w);
            }
        }
    }
    orb.size = orb.members.size();
    u64 go = g.order();
    if (go % orb.size != 0) throw std::logic_error("orbit size does not divide group order");
    orb.stabilizer_order = go / orb.size;
    return orb;
}

}  // namespace

OrbitOf<ProjPoint> orbit(const Subgroup& g, const ProjPoint& pt) {
    u64 p = g.modulus();
    return orbit_bfs(g, pt, p + 1, act_proj, [p](const ProjPoint& q) { return proj_index(q, p); });
}

OrbitOf<VecPoint> orbit(const Subgroup& g, const VecPoint& pt) {
    u64 p = g.modulus();
    return orbit_bfs(g, pt, p * p, act_vec, [p](const VecPoint& q) { return vec_index(q, p); });
}

namespace {

template <typename Point, typename Act, typename Index>
OrbitPartition partition_bfs(const Subgroup& g, const std::vector<Point>& all, u64 space_size,
                             Act act, Index index) {
    std::vector<char> seen(space_size, 0);
    OrbitPartition part;
    for (const Point& start : all) {
        if (seen[index(start)]) continue;
        u64 count = 0;
        std::deque<Point> queue{start};
        seen[index(start)] = 1;
        ++count;
        while (!queue.empty()) {
            Point v = queue.front();
            queue.pop_front();
            for (const Matrix& m : g.generators()) {
                Point w = act(m, v);
                if (!seen[index(w)]) {
                    seen[index(w)] = 1;
                    ++count;
                    queue.push_back(w);
                }
            }
        }
        part.sizes.push_back(count);
    }
    std::sort(part.sizes.begin(), part.sizes.end());
    part.min_size = part.sizes.front();
    return part;
}

}  // namespace

OrbitPartition orbit_partition(const Subgroup& g, Space space) {
    u64 p = g.modulus();
    if (space == Space::ProjectiveLine)
        return partition_bfs(g, projective_line(p), p + 1, act_proj,
                             [p](const ProjPoint& q) { return proj_index(q, p); });
    return partition_bfs(g, nonzero_vectors(p), p * p, act_vec,
                         [p](const VecPoint& q) { return vec_index(q, p); });
}

u64 min_orbit_size(const Subgroup& g, Space space) { return orbit_partition(g, space).min_size; }

Subgroup stabilizer(const Subgroup& g, const ProjPoint& pt) {
    std::vector<Matrix> fix;
    for (const Matrix& m : g.elements())
        if (act_proj(m, pt) == pt) fix.push_back(m);
    return Subgroup::from_elements(std::move(fix), g.label() + ".stab");
}

Subgroup stabilizer(const Subgroup& g, const VecPoint& pt) {
    std::vector<Matrix> fix;
    for (const Matrix& m : g.elements())
        if (act_vec(m, pt) == pt) fix.push_back(m);
    return Subgroup::from_elements(std::move(fix), g.label() + ".stab");
}

}  // namespace isodeg
