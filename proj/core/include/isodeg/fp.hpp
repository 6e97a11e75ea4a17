#pragma once

#include <cstdint>
#include <vector>

namespace isodeg {

using u64 = std::uint64_t;

// Arithmetic in F_p for an odd prime p. Values are canonical residues in [0, p).
// Everything here is a pure function; FpElement is a value type.

bool is_prime(u64 n);

u64 add_mod(u64 a, u64 b, u64 p);
u64 sub_mod(u64 a, u64 b, u64 p);
u64 mul_mod(u64 a, u64 b, u64 p);
u64 pow_mod(u64 a, u64 e, u64 p);
u64 inv_mod(u64 a, u64 p);

struct FpElement {
    u64 value = 0;
    u64 modulus = 0;

    FpElement() = default;
    // Reduces v mod p; throws if p is not an odd prime.
    FpElement(u64 v, u64 p);

    friend bool operator==(const FpElement&, const FpElement&) = default;
};

FpElement operator+(const FpElement& x, const FpElement& y);
FpElement operator-(const FpElement& x, const FpElement& y);
FpElement operator*(const FpElement& x, const FpElement& y);
FpElement inverse(const FpElement& x);

// Euler criterion x^((p-1)/2). Rejects x = 0 (neither residue class by convention).
bool is_square(const FpElement& x);

// Smallest integer e >= 2 with (e|p) = -1. Rejects p = 2 and composite p.
FpElement smallest_nonresidue(u64 p);

// All quadratic non-residues of F_p in increasing order.
std::vector<u64> nonresidues(u64 p);

// Distinct prime factors of n, by trial division.
std::vector<u64> prime_factors(u64 n);

// Multiplicative order of x in F_p^x.
u64 element_order(const FpElement& x);

// Smallest primitive root mod p.
u64 primitive_root(u64 p);

}  // namespace isodeg
