#include "isodeg/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace isodeg {
namespace oracle {

namespace {

void require_cap(u64 p) {
    if (p < 5 || p > kMaxPrime || !is_prime(p))
        throw std::invalid_argument("oracle supports primes 5 <= p <= " +
                                    std::to_string(kMaxPrime) + ", got " + std::to_string(p));
}

}  // namespace

EnumeratedGroup enumerate_gl2(u64 p) {
    require_cap(p);
    EnumeratedGroup g{p, {}};
    g.elements.reserve(gl2_order(p));
    for (u64 a = 0; a < p; ++a)
        for (u64 b = 0; b < p; ++b)
            for (u64 c = 0; c < p; ++c)
                for (u64 d = 0; d < p; ++d)
                    if (sub_mod(mul_mod(a, d, p), mul_mod(b, c, p), p) != 0)
                        g.elements.push_back(Matrix(p, a, b, c, d));
    return g;
}

std::vector<Matrix> enumerate_borel(u64 p) {
    require_cap(p);
    std::vector<Matrix> out;
    for (u64 a = 1; a < p; ++a)
        for (u64 c = 1; c < p; ++c)
            for (u64 b = 0; b < p; ++b) out.push_back(Matrix(p, a, b, 0, c));
    return out;
}

std::vector<Matrix> enumerate_cns(u64 p, u64 epsilon) {
    require_cap(p);
    std::vector<Matrix> out;
    for (u64 a = 0; a < p; ++a)
        for (u64 b = 0; b < p; ++b)
            if (a || b) out.push_back(Matrix(p, a, mul_mod(epsilon, b, p), b, a));
    return out;
}

std::vector<Matrix> enumerate_cns_plus(u64 p, u64 epsilon) {
    std::vector<Matrix> out = enumerate_cns(p, epsilon);
    for (u64 c = 0; c < p; ++c)
        for (u64 d = 0; d < p; ++d)
            if (c || d)
                out.push_back(Matrix(p, c, mul_mod(epsilon, d, p), sub_mod(0, d, p), sub_mod(0, c, p)));
    return out;
}

namespace {

template <typename Point, typename Act>
OrbitOf<Point> orbit_all(const std::vector<Matrix>& elements, const Point& pt, Act act) {
    OrbitOf<Point> orb;
    orb.base = pt;
    std::unordered_set<u64> seen;
    u64 p = elements.front().p;
    u64 stab = 0;
    for (const Matrix& m : elements) {
        Point w = act(m, pt);
        if (w == pt) ++stab;
        if (seen.insert(w.x * p + w.y).second) orb.members.push_back(w);
    }
    orb.size = orb.members.size();
    orb.stabilizer_order = stab;
    if (orb.size * stab != elements.size())
        throw std::logic_error("orbit-stabilizer identity failed in oracle");
    return orb;
}

}  // namespace

OrbitOf<ProjPoint> orbit_bruteforce(const std::vector<Matrix>& elements, const ProjPoint& pt) {
    return orbit_all(elements, pt, act_proj);
}

OrbitOf<VecPoint> orbit_bruteforce(const std::vector<Matrix>& elements, const VecPoint& pt) {
    return orbit_all(elements, pt, act_vec);
}

std::vector<u64> orbit_partition_bruteforce(const std::vector<Matrix>& elements, u64 p,
                                            Space space) {
    std::vector<u64> sizes;
    std::unordered_set<u64> seen;
    if (space == Space::ProjectiveLine) {
        for (const ProjPoint& pt : projective_line(p)) {
            if (seen.count(pt.x * p + pt.y)) continue;
            auto orb = orbit_bruteforce(elements, pt);
            for (const ProjPoint& w : orb.members) seen.insert(w.x * p + w.y);
            sizes.push_back(orb.size);
        }
    } else {
        for (const VecPoint& pt : nonzero_vectors(p)) {
            if (seen.count(pt.x * p + pt.y)) continue;
            auto orb = orbit_bruteforce(elements, pt);
            for (const VecPoint& w : orb.members) seen.insert(w.x * p + w.y);
            sizes.push_back(orb.size);
        }
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

u64 stabilizer_order_bruteforce(const std::vector<Matrix>& elements, const ProjPoint& pt) {
    u64 n = 0;
    for (const Matrix& m : elements)
        if (act_proj(m, pt) == pt) ++n;
    return n;
}

u64 stabilizer_order_bruteforce(const std::vector<Matrix>& elements, const VecPoint& pt) {
    u64 n = 0;
    for (const Matrix& m : elements)
        if (act_vec(m, pt) == pt) ++n;
    return n;
}

std::vector<Matrix> close_set(std::vector<Matrix> elements) {
    std::unordered_set<u64> seen;
    for (const Matrix& m : elements) seen.insert(m.key());
    // multiply every known element by every new element until stable
    std::vector<Matrix> frontier = elements;
    while (!frontier.empty()) {
        std::vector<Matrix> next;
        for (const Matrix& f : frontier) {
            for (std::size_t i = 0; i < elements.size(); ++i) {
                Matrix prod = multiply(elements[i], f);
                if (seen.insert(prod.key()).second) next.push_back(prod);
                prod = multiply(f, elements[i]);
                if (seen.insert(prod.key()).second) next.push_back(prod);
            }
        }
        for (const Matrix& m : next) elements.push_back(m);
        frontier = std::move(next);
    }
    return elements;
}

PowerSetReport powerset_vs_generated(const CatalogEntry& entry, u64 a) {
    require_cap(entry.p);
    std::vector<Matrix> raw;
    std::unordered_set<u64> seen;
    for (const Matrix& x : entry.group.elements()) {
        Matrix xa = matrix_pow(x, a);
        if (seen.insert(xa.key()).second) raw.push_back(xa);
    }
    u64 raw_size = raw.size();
    std::vector<Matrix> generated = close_set(std::move(raw));
    return {raw_size, generated.size(), raw_size == generated.size()};
}

}  // namespace oracle
}  // namespace isodeg
