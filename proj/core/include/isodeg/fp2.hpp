#pragma once

#include "isodeg/fp.hpp"

namespace isodeg {

// F_p^2 realized as F_p(sqrt(eps)) for a fixed quadratic non-residue eps.
// An element is a + b*sqrt(eps); the norm a^2 - eps*b^2 vanishes only at 0.
struct Fp2Element {
    FpElement a;
    FpElement b;
    u64 epsilon = 0;

    Fp2Element() = default;
    Fp2Element(FpElement a_, FpElement b_, u64 eps);

    u64 modulus() const { return a.modulus; }
    bool is_zero() const { return a.value == 0 && b.value == 0; }

    friend bool operator==(const Fp2Element&, const Fp2Element&) = default;
};

Fp2Element fp2_one(u64 p, u64 eps);
Fp2Element operator*(const Fp2Element& x, const Fp2Element& y);
Fp2Element fp2_pow(Fp2Element x, u64 e);

// N(a + b*sqrt(eps)) = a^2 - eps*b^2.
FpElement fp2_norm(const Fp2Element& x);

u64 fp2_element_order(const Fp2Element& x);

// Deterministic generator of F_p^2^x: scans candidates a + b*sqrt(eps), b != 0,
// lexicographically in (a, b) and returns the first one of order p^2 - 1
// (verified by g^((p^2-1)/q) != 1 for every prime q | p^2 - 1).
Fp2Element fp2_generator(u64 p, const FpElement& epsilon);

}  // namespace isodeg
