#pragma once

#include "isodeg/action.hpp"
#include "isodeg/catalog.hpp"

#include <vector>

namespace isodeg {

// Primes for which no constraint on the mod-p image is available; the degree
// machinery refuses them.
const std::vector<u64>& iq1_primes();
bool in_iq1(u64 p);

enum class ImageTag { Surjective, CnsPlus, CnsPlusCubed };

const char* image_tag_name(ImageTag t);

struct ImageClass {
    ImageTag tag;
    CatalogEntry realizing_group;
};

// The possible mod-p Galois images for a non-CM curve with rational
// j-invariant, p outside the base set: always Surjective or C_ns+, plus the
// index-3 subgroup of C_ns+ when p = 2 mod 3. Orbit statistics are
// conjugation-invariant, so the standard-epsilon representative stands in for
// the whole conjugacy class.
std::vector<ImageClass> allowed_images(u64 p);
std::vector<ImageClass> allowed_images(u64 p, const FpElement& epsilon);

struct ImageOrbitSummary {
    ImageTag tag;
    u64 group_order;
    u64 min_orbit;              // minimal P^1-orbit size
    std::vector<u64> partition;  // full orbit-size partition of p+1, ascending
};

struct DegreeReport {
    u64 p;
    u64 residue_mod_3;
    std::vector<ImageOrbitSummary> per_image;
    u64 d_lower;  // min over per_image min_orbit; a lower bound for the
                  // minimal degree of definition of a p-isogeny, exact when
                  // the minimizing image class is realized by a curve
};

// Minimal P^1-orbit size over all allowed images. Equals p+1 for p = 1 mod 3
// and (p+1)/3 for p = 2 mod 3.
DegreeReport degree_lower_bound(u64 p);
DegreeReport degree_lower_bound(u64 p, const FpElement& epsilon);

// Same minimum but with the non-split Cartan case forced to contain all of
// C_ns (good or multiplicative reduction over Q_p); always p+1.
u64 nonadditive_bound(u64 p);

// Minimal vector-orbit size of C_ns^a: (p^2-1)/gcd(a, p^2-1), computed by
// orbit sweep and checked against the closed form.
u64 point_degree_lower_bound(u64 p, u64 a);

}  // namespace isodeg
