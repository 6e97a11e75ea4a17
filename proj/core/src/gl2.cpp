#include "isodeg/gl2.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace isodeg {

u64 gl2_order(u64 p) { return p * (p - 1) * (p - 1) * (p + 1); }

Matrix::Matrix(u64 p_, u64 m11, u64 m12, u64 m21, u64 m22)
    : p(p_), m{m11 % p_, m12 % p_, m21 % p_, m22 % p_} {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("matrix modulus must be prime");
    if (det() == 0) throw std::invalid_argument("matrix is singular mod " + std::to_string(p));
}

u64 Matrix::det() const { return sub_mod(mul_mod(m[0], m[3], p), mul_mod(m[1], m[2], p), p); }
u64 Matrix::trace() const { return add_mod(m[0], m[3], p); }
bool Matrix::is_identity() const { return m[0] == 1 && m[1] == 0 && m[2] == 0 && m[3] == 1; }

Matrix identity(u64 p) { return Matrix(p, 1, 0, 0, 1); }

Matrix multiply(const Matrix& x, const Matrix& y) {
    if (x.p != y.p) throw std::invalid_argument("modulus mismatch");
    u64 p = x.p;
    return Matrix(p, add_mod(mul_mod(x.m[0], y.m[0], p), mul_mod(x.m[1], y.m[2], p), p),
                  add_mod(mul_mod(x.m[0], y.m[1], p), mul_mod(x.m[1], y.m[3], p), p),
                  add_mod(mul_mod(x.m[2], y.m[0], p), mul_mod(x.m[3], y.m[2], p), p),
                  add_mod(mul_mod(x.m[2], y.m[1], p), mul_mod(x.m[3], y.m[3], p), p));
}

Matrix inverse(const Matrix& x) {
    u64 p = x.p;
    u64 di = inv_mod(x.det(), p);
    return Matrix(p, mul_mod(x.m[3], di, p), mul_mod(sub_mod(0, x.m[1], p), di, p),
                  mul_mod(sub_mod(0, x.m[2], p), di, p), mul_mod(x.m[0], di, p));
}

Matrix matrix_pow(Matrix x, u64 e) {
    Matrix r = identity(x.p);
    while (e) {
        if (e & 1) r = multiply(r, x);
        x = multiply(x, x);
        e >>= 1;
    }
    return r;
}

u64 element_order(const Matrix& x) {
    // The order divides the group order p(p-1)^2(p+1); factor the pieces
    // separately to keep trial division cheap.
    u64 p = x.p;
    std::vector<u64> factors = prime_factors(p - 1);
    for (u64 f : prime_factors(p + 1))
        if (std::find(factors.begin(), factors.end(), f) == factors.end()) factors.push_back(f);
    if (std::find(factors.begin(), factors.end(), p) == factors.end()) factors.push_back(p);
    u64 o = gl2_order(p);
    for (u64 f : factors)
        while (o % f == 0 && matrix_pow(x, o / f).is_identity()) o /= f;
    return o;
}

std::vector<Matrix> closure(const std::vector<Matrix>& generators, u64 element_cap) {
    if (generators.empty()) throw std::invalid_argument("closure of empty generating set");
    u64 p = generators[0].p;
    for (const Matrix& g : generators)
        if (g.p != p) throw std::invalid_argument("modulus mismatch in generating set");
    u64 cap = std::min<u64>(gl2_order(p), element_cap);

    std::unordered_set<u64> seen;
    std::vector<Matrix> out;
    std::deque<Matrix> queue;
    auto push = [&](const Matrix& x) {
        if (seen.insert(x.key()).second) {
            if (out.size() >= cap)
                throw std::runtime_error("subgroup closure exceeded element cap");
            out.push_back(x);
            queue.push_back(x);
        }
    };
    push(identity(p));
    while (!queue.empty()) {
        Matrix x = queue.front();
        queue.pop_front();
        for (const Matrix& g : generators) push(multiply(x, g));
    }
    if (out.size() > gl2_order(p)) throw std::logic_error("closure exceeded |GL2(F_p)|");
    return out;
}

Subgroup::Subgroup(std::vector<Matrix> generators, std::string label, std::optional<u64> known_order)
    : generators_(std::move(generators)), label_(std::move(label)), order_(known_order) {
    if (generators_.empty()) throw std::invalid_argument("subgroup needs at least one generator");
    u64 p = generators_[0].p;
    for (const Matrix& g : generators_)
        if (g.p != p) throw std::invalid_argument("modulus mismatch in generating set");
}

Subgroup Subgroup::from_elements(std::vector<Matrix> elements, std::string label) {
    if (elements.empty()) throw std::invalid_argument("empty element set");
    Subgroup s(elements, std::move(label), elements.size());
    s.elements_ = std::move(elements);
    return s;
}

const std::vector<Matrix>& Subgroup::elements() const {
    if (elements_.empty()) {
        elements_ = closure(generators_);
        order_ = elements_.size();
    }
    return elements_;
}

u64 Subgroup::order() const {
    if (!order_) elements();
    return *order_;
}

bool Subgroup::contains(const Matrix& x) const {
    const auto& els = elements();
    return std::any_of(els.begin(), els.end(), [&](const Matrix& e) { return e == x; });
}

bool Subgroup::same_elements(const Subgroup& other) const {
    if (modulus() != other.modulus()) return false;
    std::unordered_set<u64> mine;
    for (const Matrix& e : elements()) mine.insert(e.key());
    if (mine.size() != other.elements().size()) return false;
    return std::all_of(other.elements().begin(), other.elements().end(),
                       [&](const Matrix& e) { return mine.count(e.key()) > 0; });
}

Subgroup conjugate_subgroup(const Subgroup& g, const Matrix& m) {
    if (g.modulus() != m.p) throw std::invalid_argument("modulus mismatch");
    Matrix mi = inverse(m);
    std::vector<Matrix> gens;
    gens.reserve(g.generators().size());
    for (const Matrix& x : g.generators()) gens.push_back(multiply(multiply(m, x), mi));
    return Subgroup(std::move(gens), g.label() + "^conj", g.known_order());
}

}  // namespace isodeg
