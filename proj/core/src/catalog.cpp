#include "isodeg/catalog.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace isodeg {

const char* catalog_kind_name(CatalogKind k) {
    switch (k) {
        case CatalogKind::GL2: return "GL2";
        case CatalogKind::Borel: return "Borel";
        case CatalogKind::Cns: return "Cns";
        case CatalogKind::CnsPlus: return "Cns+";
        case CatalogKind::CnsPower: return "Cns^e";
        case CatalogKind::CnsPlusPower: return "Cns+^a";
        case CatalogKind::GeneratedPower: return "generated-power";
    }
    return "?";
}

namespace {

void require_p(u64 p) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("catalog requires a prime p >= 5, got " + std::to_string(p));
}

void require_nonresidue(u64 p, const FpElement& eps) {
    if (eps.modulus != p) throw std::invalid_argument("epsilon modulus mismatch");
    if (eps.value == 0 || is_square(eps))
        throw std::invalid_argument("epsilon must be a quadratic non-residue mod " +
                                    std::to_string(p));
}

}  // namespace

Matrix cartan_matrix(const Fp2Element& z) {
    if (z.is_zero()) throw std::invalid_argument("zero is not in F_p^2^x");
    u64 p = z.modulus();
    return Matrix(p, z.a.value, mul_mod(z.epsilon, z.b.value, p), z.b.value, z.a.value);
}

Matrix cartan_flip(u64 p) { return Matrix(p, 1, 0, 0, p - 1); }

CatalogEntry gl2_full(u64 p) {
    require_p(p);
    u64 r = primitive_root(p);
    std::vector<Matrix> gens = {Matrix(p, 1, 1, 0, 1), Matrix(p, 1, 0, 1, 1), Matrix(p, r, 0, 0, 1)};
    return {CatalogKind::GL2, p, FpElement(0, p), 1, Subgroup(std::move(gens), "GL2", gl2_order(p))};
}

CatalogEntry borel(u64 p) {
    require_p(p);
    u64 r = primitive_root(p);
    std::vector<Matrix> gens = {Matrix(p, r, 0, 0, 1), Matrix(p, 1, 0, 0, r), Matrix(p, 1, 1, 0, 1)};
    return {CatalogKind::Borel, p, FpElement(0, p), 1,
            Subgroup(std::move(gens), "Borel", p * (p - 1) * (p - 1))};
}

CatalogEntry nonsplit_cartan(u64 p, const FpElement& epsilon) {
    require_p(p);
    require_nonresidue(p, epsilon);
    Matrix g = cartan_matrix(fp2_generator(p, epsilon));
    return {CatalogKind::Cns, p, epsilon, 1, Subgroup({g}, "Cns", p * p - 1)};
}

CatalogEntry nonsplit_cartan_normalizer(u64 p, const FpElement& epsilon) {
    require_p(p);
    require_nonresidue(p, epsilon);
    Matrix g = cartan_matrix(fp2_generator(p, epsilon));
    return {CatalogKind::CnsPlus, p, epsilon, 1,
            Subgroup({g, cartan_flip(p)}, "Cns+", 2 * (p * p - 1))};
}

CatalogEntry cns_power(u64 p, const FpElement& epsilon, u64 e) {
    require_p(p);
    require_nonresidue(p, epsilon);
    if (e < 1) throw std::invalid_argument("power must be >= 1");
    u64 q = p * p - 1;
    Matrix ge = cartan_matrix(fp2_pow(fp2_generator(p, epsilon), e));
    return {CatalogKind::CnsPower, p, epsilon, e,
            Subgroup({ge}, "Cns^" + std::to_string(e), q / std::gcd(e, q))};
}

CatalogEntry cns_plus_power(u64 p, const FpElement& epsilon, u64 a) {
    require_p(p);
    require_nonresidue(p, epsilon);
    if (a < 1) throw std::invalid_argument("power must be >= 1");
    u64 q = p * p - 1;
    Matrix ga = cartan_matrix(fp2_pow(fp2_generator(p, epsilon), a));
    return {CatalogKind::CnsPlusPower, p, epsilon, a,
            Subgroup({ga, cartan_flip(p)}, "Cns+^" + std::to_string(a), 2 * (q / std::gcd(a, q)))};
}

CatalogEntry power_subgroup(const CatalogEntry& entry, u64 a) {
    if (a < 1) throw std::invalid_argument("power must be >= 1");
    std::vector<Matrix> powers;
    std::unordered_set<u64> seen;
    for (const Matrix& x : entry.group.elements()) {
        Matrix xa = matrix_pow(x, a);
        if (seen.insert(xa.key()).second) powers.push_back(xa);
    }
    Subgroup gen(std::move(powers), entry.group.label() + "^" + std::to_string(a) + "(gen)");
    gen.elements();  // materialize now so the order is pinned
    return {CatalogKind::GeneratedPower, entry.p, entry.epsilon, a, std::move(gen)};
}

std::vector<CatalogEntry> full_catalog(u64 p, const FpElement& epsilon) {
    std::vector<CatalogEntry> out;
    out.push_back(gl2_full(p));
    out.push_back(borel(p));
    out.push_back(nonsplit_cartan(p, epsilon));
    out.push_back(nonsplit_cartan_normalizer(p, epsilon));
    for (u64 e = 1; e <= 6; ++e) {
        out.push_back(cns_power(p, epsilon, e));
        out.push_back(cns_plus_power(p, epsilon, e));
    }
    return out;
}

}  // namespace isodeg
