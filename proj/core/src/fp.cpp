#include "isodeg/fp.hpp"

#include <stdexcept>
#include <string>

namespace isodeg {

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

u64 add_mod(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 sub_mod(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }
u64 mul_mod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw std::domain_error("inverse of 0 mod " + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

FpElement::FpElement(u64 v, u64 p) : value(v % p), modulus(p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
}

namespace {
void check_same(const FpElement& x, const FpElement& y) {
    if (x.modulus != y.modulus) throw std::invalid_argument("modulus mismatch");
}
}  // namespace

FpElement operator+(const FpElement& x, const FpElement& y) {
    check_same(x, y);
    return {add_mod(x.value, y.value, x.modulus), x.modulus};
}

FpElement operator-(const FpElement& x, const FpElement& y) {
    check_same(x, y);
    return {sub_mod(x.value, y.value, x.modulus), x.modulus};
}

FpElement operator*(const FpElement& x, const FpElement& y) {
    check_same(x, y);
    return {mul_mod(x.value, y.value, x.modulus), x.modulus};
}

FpElement inverse(const FpElement& x) { return {inv_mod(x.value, x.modulus), x.modulus}; }

bool is_square(const FpElement& x) {
    if (x.value == 0) throw std::domain_error("is_square(0) is undefined");
    return pow_mod(x.value, (x.modulus - 1) / 2, x.modulus) == 1;
}

FpElement smallest_nonresidue(u64 p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("smallest_nonresidue requires an odd prime");
    for (u64 e = 2; e < p; ++e)
        if (!is_square(FpElement(e, p))) return {e, p};
    throw std::logic_error("no non-residue found");  // unreachable for p >= 3
}

std::vector<u64> nonresidues(u64 p) {
    std::vector<u64> out;
    for (u64 e = 2; e < p; ++e)
        if (!is_square(FpElement(e, p))) out.push_back(e);
    return out;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

u64 element_order(const FpElement& x) {
    if (x.value == 0) throw std::domain_error("0 has no multiplicative order");
    u64 p = x.modulus;
    u64 o = p - 1;
    for (u64 q : prime_factors(p - 1))
        while (o % q == 0 && pow_mod(x.value, o / q, p) == 1) o /= q;
    return o;
}

u64 primitive_root(u64 p) {
    for (u64 g = 2; g < p; ++g)
        if (element_order(FpElement(g, p)) == p - 1) return g;
    throw std::logic_error("no primitive root found");
}

}  // namespace isodeg
