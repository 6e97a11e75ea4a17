#include "isodeg/degrees.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace isodeg {

const std::vector<u64>& iq1_primes() {
    static const std::vector<u64> base = {2, 3, 5, 7, 11, 13, 17, 37};
    return base;
}

bool in_iq1(u64 p) {
    const auto& base = iq1_primes();
    return std::find(base.begin(), base.end(), p) != base.end();
}

const char* image_tag_name(ImageTag t) {
    switch (t) {
        case ImageTag::Surjective: return "surjective";
        case ImageTag::CnsPlus: return "cns-plus";
        case ImageTag::CnsPlusCubed: return "cns-plus-cubed";
    }
    return "?";
}

namespace {

void require_degree_prime(u64 p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p < 5) throw std::invalid_argument("p must be >= 5");
    if (in_iq1(p))
        throw std::domain_error(std::to_string(p) +
                                " is in the base prime set; no image constraint applies");
}

}  // namespace

std::vector<ImageClass> allowed_images(u64 p) {
    return allowed_images(p, smallest_nonresidue(p));
}

std::vector<ImageClass> allowed_images(u64 p, const FpElement& epsilon) {
    require_degree_prime(p);
    std::vector<ImageClass> images;
    images.push_back({ImageTag::Surjective, gl2_full(p)});
    images.push_back({ImageTag::CnsPlus, nonsplit_cartan_normalizer(p, epsilon)});
    if (p % 3 == 2) images.push_back({ImageTag::CnsPlusCubed, cns_plus_power(p, epsilon, 3)});
    return images;
}

DegreeReport degree_lower_bound(u64 p) {
    return degree_lower_bound(p, smallest_nonresidue(p));
}

DegreeReport degree_lower_bound(u64 p, const FpElement& epsilon) {
    DegreeReport report;
    report.p = p;
    report.residue_mod_3 = p % 3;
    u64 best = 0;
    for (const ImageClass& img : allowed_images(p, epsilon)) {
        OrbitPartition part = orbit_partition(img.realizing_group.group, Space::ProjectiveLine);
        ImageOrbitSummary s{img.tag, img.realizing_group.group.order(), part.min_size, part.sizes};
        if (best == 0 || s.min_orbit < best) best = s.min_orbit;
        report.per_image.push_back(std::move(s));
    }
    report.d_lower = best;
    return report;
}

u64 nonadditive_bound(u64 p) {
    require_degree_prime(p);
    FpElement eps = smallest_nonresidue(p);
    u64 best = min_orbit_size(gl2_full(p).group, Space::ProjectiveLine);
    // e = 1: the image contains C_ns itself, so any admissible image G with
    // C_ns <= G <= Cns+ has orbits at least as large as those of C_ns.
    best = std::min(best, min_orbit_size(nonsplit_cartan(p, eps).group, Space::ProjectiveLine));
    best = std::min(best,
                    min_orbit_size(nonsplit_cartan_normalizer(p, eps).group, Space::ProjectiveLine));
    return best;
}

u64 point_degree_lower_bound(u64 p, u64 a) {
    if (!is_prime(p) || p < 5) throw std::invalid_argument("p must be a prime >= 5");
    if (a < 1 || a > 6) throw std::invalid_argument("a must be in 1..6");
    FpElement eps = smallest_nonresidue(p);
    u64 q = p * p - 1;
    u64 computed = min_orbit_size(cns_power(p, eps, a).group, Space::NonzeroVectors);
    u64 closed_form = q / std::gcd(a, q);
    if (computed != closed_form)
        throw std::logic_error("vector-orbit sweep disagrees with (p^2-1)/gcd(a, p^2-1)");
    return computed;
}

}  // namespace isodeg
