#include "isodeg/verify.hpp"

#include "isodeg/action.hpp"
#include "isodeg/catalog.hpp"
#include "isodeg/degrees.hpp"
#include "isodeg/oracle.hpp"
#include "isodeg/prime_sets.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace isodeg {
namespace verify {

namespace {

constexpr std::size_t kMaxFailures = 20;

std::vector<u64> primes_in(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 p : primes_up_to(hi))
        if (p >= lo) out.push_back(p);
    return out;
}

// Oracle-side element list for a catalog entry: shape enumerations and raw
// power-set closure, no generator BFS.
std::vector<Matrix> oracle_elements(const CatalogEntry& entry) {
    u64 p = entry.p;
    u64 eps = entry.epsilon.value;
    switch (entry.kind) {
        case CatalogKind::GL2: return oracle::enumerate_gl2(p).elements;
        case CatalogKind::Borel: return oracle::enumerate_borel(p);
        case CatalogKind::Cns: return oracle::enumerate_cns(p, eps);
        case CatalogKind::CnsPlus: return oracle::enumerate_cns_plus(p, eps);
        case CatalogKind::CnsPower: {
            std::vector<Matrix> raw;
            std::unordered_set<u64> seen;
            for (const Matrix& x : oracle::enumerate_cns(p, eps)) {
                Matrix xa = matrix_pow(x, entry.power);
                if (seen.insert(xa.key()).second) raw.push_back(xa);
            }
            return oracle::close_set(std::move(raw));
        }
        case CatalogKind::CnsPlusPower: {
            std::vector<Matrix> raw;
            std::unordered_set<u64> seen;
            for (const Matrix& x : oracle::enumerate_cns(p, eps)) {
                Matrix xa = matrix_pow(x, entry.power);
                if (seen.insert(xa.key()).second) raw.push_back(xa);
            }
            Matrix flip(p, 1, 0, 0, p - 1);
            if (seen.insert(flip.key()).second) raw.push_back(flip);
            return oracle::close_set(std::move(raw));
        }
        case CatalogKind::GeneratedPower: break;
    }
    throw std::invalid_argument("no oracle enumeration for this catalog kind");
}

u64 closed_form_order(const CatalogEntry& entry) {
    u64 p = entry.p;
    u64 q = p * p - 1;
    switch (entry.kind) {
        case CatalogKind::GL2: return gl2_order(p);
        case CatalogKind::Borel: return p * (p - 1) * (p - 1);
        case CatalogKind::Cns: return q;
        case CatalogKind::CnsPlus: return 2 * q;
        case CatalogKind::CnsPower: return q / std::gcd(entry.power, q);
        case CatalogKind::CnsPlusPower: return 2 * (q / std::gcd(entry.power, q));
        case CatalogKind::GeneratedPower: break;
    }
    throw std::invalid_argument("no closed-form order for this catalog kind");
}

std::string entry_tag(const CatalogEntry& entry) {
    return "p=" + std::to_string(entry.p) + " " + entry.group.label();
}

}  // namespace

void CheckResult::fail(std::string msg) {
    pass = false;
    if (failures.size() < kMaxFailures) failures.push_back(std::move(msg));
}

CheckResult check_order_formulas(u64 p_max) {
    CheckResult r{"order-formulas"};
    for (u64 p : primes_in(5, std::min(p_max, oracle::kMaxPrime))) {
        FpElement eps = smallest_nonresidue(p);
        for (const CatalogEntry& entry : full_catalog(p, eps)) {
            ++r.cases;
            auto oracle_els = oracle_elements(entry);
            u64 formula = closed_form_order(entry);
            u64 bfs = entry.group.elements().size();
            if (entry.group.order() != formula || bfs != formula || oracle_els.size() != formula)
                r.fail(entry_tag(entry) + ": orders formula=" + std::to_string(formula) +
                       " bfs=" + std::to_string(bfs) +
                       " oracle=" + std::to_string(oracle_els.size()));
            std::unordered_set<u64> keys;
            for (const Matrix& m : oracle_els) keys.insert(m.key());
            for (const Matrix& m : entry.group.elements())
                if (!keys.count(m.key())) {
                    r.fail(entry_tag(entry) + ": BFS element outside oracle enumeration");
                    break;
                }
        }
    }
    return r;
}

CheckResult check_oracle_equivalence(u64 p_max) {
    CheckResult r{"oracle-equivalence"};
    for (u64 p : primes_in(5, std::min(p_max, oracle::kMaxPrime))) {
        FpElement eps = smallest_nonresidue(p);
        for (const CatalogEntry& entry : full_catalog(p, eps)) {
            ++r.cases;
            auto els = oracle_elements(entry);
            for (Space space : {Space::ProjectiveLine, Space::NonzeroVectors}) {
                auto bfs = orbit_partition(entry.group, space).sizes;
                auto brute = oracle::orbit_partition_bruteforce(els, p, space);
                if (bfs != brute) r.fail(entry_tag(entry) + ": orbit partitions differ");
            }
            for (const ProjPoint& pt : projective_line(p)) {
                auto orb = orbit(entry.group, pt);
                if (orb.stabilizer_order != oracle::stabilizer_order_bruteforce(els, pt)) {
                    r.fail(entry_tag(entry) + ": line stabilizer order mismatch");
                    break;
                }
            }
            for (const VecPoint& pt : nonzero_vectors(p)) {
                auto orb = orbit(entry.group, pt);
                if (orb.stabilizer_order != oracle::stabilizer_order_bruteforce(els, pt)) {
                    r.fail(entry_tag(entry) + ": vector stabilizer order mismatch");
                    break;
                }
            }
        }
    }
    return r;
}

CheckResult check_stabilizer_divisibility(u64 p_max) {
    CheckResult r{"stabilizer-index-divisibility"};
    for (u64 p : primes_in(5, std::min(p_max, oracle::kMaxPrime))) {
        FpElement eps = smallest_nonresidue(p);
        for (const CatalogEntry& entry : full_catalog(p, eps)) {
            const auto& els = entry.group.elements();
            // stabilizer orders of the p+1 lines, indexed as in action.cpp
            std::vector<u64> line_stab(p + 1, 0);
            for (const ProjPoint& line : projective_line(p)) {
                u64 idx = line.x == 1 ? line.y : p;
                for (const Matrix& m : els)
                    if (act_proj(m, line) == line) ++line_stab[idx];
            }
            for (const VecPoint& v : nonzero_vectors(p)) {
                ++r.cases;
                u64 sp = 0;
                for (const Matrix& m : els)
                    if (act_vec(m, v) == v) ++sp;
                ProjPoint line = ProjPoint::from(v.x, v.y, p);
                u64 sc = line_stab[line.x == 1 ? line.y : p];
                if (sc % sp != 0 || (p - 1) % (sc / sp) != 0) {
                    r.fail(entry_tag(entry) + ": index " + std::to_string(sc) + "/" +
                           std::to_string(sp) + " at vector (" + std::to_string(v.x) + "," +
                           std::to_string(v.y) + ") does not divide p-1");
                }
            }
        }
    }
    return r;
}

CheckResult check_vector_orbit_bound(u64 p_max) {
    CheckResult r{"vector-orbit-bound"};
    for (u64 p : primes_in(5, std::min(p_max, oracle::kMaxPrime))) {
        FpElement eps = smallest_nonresidue(p);
        u64 q = p * p - 1;
        for (u64 a = 1; a <= 6; ++a) {
            ++r.cases;
            u64 got = min_orbit_size(cns_power(p, eps, a).group, Space::NonzeroVectors);
            u64 want = q / std::gcd(a, q);
            if (got != want || got * a < q)
                r.fail("p=" + std::to_string(p) + " a=" + std::to_string(a) + ": min vector orbit " +
                       std::to_string(got) + " != " + std::to_string(want));
        }
    }
    return r;
}

CheckResult check_epsilon_invariance(u64 p_max) {
    CheckResult r{"epsilon-invariance"};
    for (u64 p : primes_in(5, std::min(p_max, oracle::kMaxPrime))) {
        auto nrs = nonresidues(p);
        if (nrs.size() < 2) continue;
        FpElement e1(nrs.front(), p), e2(nrs.back(), p);
        auto cat1 = full_catalog(p, e1), cat2 = full_catalog(p, e2);
        for (std::size_t i = 0; i < cat1.size(); ++i) {
            ++r.cases;
            if (cat1[i].group.order() != cat2[i].group.order())
                r.fail(entry_tag(cat1[i]) + ": order depends on epsilon");
            for (Space space : {Space::ProjectiveLine, Space::NonzeroVectors}) {
                if (orbit_partition(cat1[i].group, space).sizes !=
                    orbit_partition(cat2[i].group, space).sizes)
                    r.fail(entry_tag(cat1[i]) + ": orbit multiset depends on epsilon");
            }
        }
    }
    return r;
}

CheckResult check_line_stabilizer(u64 p_max) {
    CheckResult r{"full-image-line-orbit"};
    for (u64 p : primes_in(5, p_max)) {
        ++r.cases;
        CatalogEntry g = gl2_full(p);
        if (min_orbit_size(g.group, Space::ProjectiveLine) != p + 1)
            r.fail("p=" + std::to_string(p) + ": GL2 min P^1 orbit != p+1");
        if (p <= oracle::kMaxPrime) {
            Subgroup stab = stabilizer(g.group, ProjPoint{1, 0});
            if (!stab.same_elements(borel(p).group))
                r.fail("p=" + std::to_string(p) + ": stabilizer of (1:0) is not the Borel");
        }
    }
    return r;
}

CheckResult check_degree_sweep(u64 p_max) {
    CheckResult r{"degree-lower-bound-sweep"};
    for (u64 p : primes_in(5, p_max)) {
        if (in_iq1(p)) continue;
        ++r.cases;
        DegreeReport rep = degree_lower_bound(p);
        u64 expected = p % 3 == 1 ? p + 1 : (p + 1) / 3;
        if (rep.d_lower < 8 || rep.d_lower != expected)
            r.fail("p=" + std::to_string(p) + ": d_lower=" + std::to_string(rep.d_lower) +
                   " expected " + std::to_string(expected));
        for (const ImageOrbitSummary& s : rep.per_image) {
            if (s.tag == ImageTag::Surjective && s.min_orbit != p + 1)
                r.fail("p=" + std::to_string(p) + ": surjective min orbit != p+1");
            if (std::accumulate(s.partition.begin(), s.partition.end(), u64{0}) != p + 1)
                r.fail("p=" + std::to_string(p) + ": orbit partition does not sum to p+1");
        }
    }
    return r;
}

CheckResult check_set_identities(u64 d_max, u64 p_max) {
    CheckResult r{"prime-set-identities"};
    auto base = iq1().primes;
    ++r.cases;
    if (unconditional_upper_bound(7).primes != base) r.fail("upper-bound(7) != base set");
    ++r.cases;
    if (conditional_iq(7).primes != base) r.fail("conditional(7) != base set");
    ++r.cases;
    if (conditional_iq(19).primes != base) r.fail("conditional(19) != base set");
    ++r.cases;
    if (!conditional_iq(20).contains(19)) r.fail("19 not in conditional(20)");
    ++r.cases;
    if (!unconditional_upper_bound(8).contains(23)) r.fail("23 not in upper-bound(8)");
    ++r.cases;
    auto cv = cross_validate(d_max, p_max);
    r.cases += cv.pairs_checked;
    for (const auto& v : cv.violations) r.fail("cross-validate: " + v);
    return r;
}

std::vector<CheckResult> run_all(u64 p_max, u64 d_max, bool skip_oracle) {
    std::vector<CheckResult> out;
    if (!skip_oracle) {
        out.push_back(check_order_formulas(p_max));
        out.push_back(check_oracle_equivalence(p_max));
        out.push_back(check_stabilizer_divisibility(p_max));
        out.push_back(check_vector_orbit_bound(p_max));
        out.push_back(check_epsilon_invariance(p_max));
    }
    out.push_back(check_line_stabilizer(p_max));
    out.push_back(check_degree_sweep(p_max));
    out.push_back(check_set_identities(d_max, std::min<u64>(p_max, 101)));
    return out;
}

}  // namespace verify
}  // namespace isodeg
