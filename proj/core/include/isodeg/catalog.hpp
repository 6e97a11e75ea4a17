#pragma once

#include "isodeg/fp.hpp"
#include "isodeg/fp2.hpp"
#include "isodeg/gl2.hpp"

namespace isodeg {

enum class CatalogKind { GL2, Borel, Cns, CnsPlus, CnsPower, CnsPlusPower, GeneratedPower };

const char* catalog_kind_name(CatalogKind k);

// A named subgroup of GL2(F_p) together with the data that pinned it down.
// `power` is the exponent for the power kinds, 1 otherwise.
struct CatalogEntry {
    CatalogKind kind;
    u64 p;
    FpElement epsilon;  // the non-residue in use (unused for GL2/Borel)
    u64 power;
    Subgroup group;
};

// The matrix (a  eps*b / b  a) attached to a + b*sqrt(eps) in F_p^2^x.
Matrix cartan_matrix(const Fp2Element& z);

// The involution (1 0 / 0 -1) = N(1,0); conjugates M(a,b) to M(a,-b).
Matrix cartan_flip(u64 p);

// Full GL2(F_p): elementary matrices plus a diagonal of determinant a
// primitive root. Order p(p-1)^2(p+1).
CatalogEntry gl2_full(u64 p);

// Upper-triangular subgroup, order p(p-1)^2.
CatalogEntry borel(u64 p);

// Non-split Cartan {M(a,b)}, cyclic of order p^2-1, generated by the image of
// a generator of F_p^2^x.
CatalogEntry nonsplit_cartan(u64 p, const FpElement& epsilon);

// Its normalizer {M(a,b)} u {N(c,d)}, order 2(p^2-1).
CatalogEntry nonsplit_cartan_normalizer(u64 p, const FpElement& epsilon);

// C_ns^e = <g^e>, order (p^2-1)/gcd(e, p^2-1).
CatalogEntry cns_power(u64 p, const FpElement& epsilon, u64 e);

// The subgroup <C_ns^a, N(1,0)> of the normalizer whose Cartan part is the
// a-th powers; order 2(p^2-1)/gcd(a, p^2-1). This is the group realizing the
// (p+1)/a orbit bound on P^1 (for a = 3 it is the index-3 subgroup of C_ns+,
// NOT the subgroup generated by cubes of C_ns+, which is all of C_ns+
// whenever gcd(p+2, p^2-1) is coprime to 3; see oracle::powerset_vs_generated).
CatalogEntry cns_plus_power(u64 p, const FpElement& epsilon, u64 a);

// Subgroup generated by { g^a : g in entry.group }. Materializes the entry,
// so it is restricted to groups small enough to enumerate.
CatalogEntry power_subgroup(const CatalogEntry& entry, u64 a);

// Every catalog kind at (p, epsilon), with power kinds for e in 1..6.
std::vector<CatalogEntry> full_catalog(u64 p, const FpElement& epsilon);

}  // namespace isodeg
