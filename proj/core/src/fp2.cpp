#include "isodeg/fp2.hpp"

#include <stdexcept>

namespace isodeg {

Fp2Element::Fp2Element(FpElement a_, FpElement b_, u64 eps) : a(a_), b(b_), epsilon(eps % a_.modulus) {
    if (a.modulus != b.modulus) throw std::invalid_argument("modulus mismatch");
}

Fp2Element fp2_one(u64 p, u64 eps) { return {FpElement(1, p), FpElement(0, p), eps}; }

Fp2Element operator*(const Fp2Element& x, const Fp2Element& y) {
    if (x.modulus() != y.modulus() || x.epsilon != y.epsilon)
        throw std::invalid_argument("mismatched F_p^2 representations");
    u64 p = x.modulus();
    // (a + b w)(c + d w) = (ac + eps bd) + (ad + bc) w, w^2 = eps
    u64 a = x.a.value, b = x.b.value, c = y.a.value, d = y.b.value;
    u64 re = add_mod(mul_mod(a, c, p), mul_mod(x.epsilon, mul_mod(b, d, p), p), p);
    u64 im = add_mod(mul_mod(a, d, p), mul_mod(b, c, p), p);
    return {FpElement(re, p), FpElement(im, p), x.epsilon};
}

Fp2Element fp2_pow(Fp2Element x, u64 e) {
    Fp2Element r = fp2_one(x.modulus(), x.epsilon);
    while (e) {
        if (e & 1) r = r * x;
        x = x * x;
        e >>= 1;
    }
    return r;
}

FpElement fp2_norm(const Fp2Element& x) {
    u64 p = x.modulus();
    return FpElement(sub_mod(mul_mod(x.a.value, x.a.value, p),
                             mul_mod(x.epsilon, mul_mod(x.b.value, x.b.value, p), p), p),
                     p);
}

u64 fp2_element_order(const Fp2Element& x) {
    if (x.is_zero()) throw std::domain_error("0 has no multiplicative order");
    u64 p = x.modulus();
    u64 q = p * p - 1;
    u64 o = q;
    Fp2Element one = fp2_one(p, x.epsilon);
    for (u64 f : prime_factors(q))
        while (o % f == 0 && fp2_pow(x, o / f) == one) o /= f;
    return o;
}

Fp2Element fp2_generator(u64 p, const FpElement& epsilon) {
    if (epsilon.modulus != p) throw std::invalid_argument("modulus mismatch");
    if (epsilon.value == 0 || is_square(epsilon))
        throw std::invalid_argument("epsilon must be a quadratic non-residue");
    u64 q = p * p - 1;
    auto factors = prime_factors(q);
    Fp2Element one = fp2_one(p, epsilon.value);
    for (u64 a = 0; a < p; ++a) {
        for (u64 b = 1; b < p; ++b) {
            Fp2Element g(FpElement(a, p), FpElement(b, p), epsilon.value);
            bool full = true;
            for (u64 f : factors) {
                if (fp2_pow(g, q / f) == one) {
                    full = false;
                    break;
                }
            }
            if (full) return g;
        }
    }
    throw std::logic_error("no generator found");  // unreachable: F_p^2^x is cyclic
}

}  // namespace isodeg
