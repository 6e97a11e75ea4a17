#include "isodeg/action.hpp"
#include "isodeg/catalog.hpp"
#include "isodeg/degrees.hpp"
#include "isodeg/prime_sets.hpp"
#include "isodeg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace isodeg;

namespace {

constexpr const char* kSchemaVersion = "1.0";
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerifyFailed = 3;

// Tabular view of a record: one header row plus data rows.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

json make_record(const std::string& command, json parameters) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["parameters"] = std::move(parameters);
    j["assumptions"] = json::array();
    j["warnings"] = json::array();
    j["results"] = json::object();
    return j;
}

void emit(const json& record, const Table& table, const std::string& format) {
    if (format == "json") {
        std::cout << record.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        auto row = [](const std::vector<std::string>& cells) {
            std::string line;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) line += ",";
                line += cells[i];
            }
            return line;
        };
        std::cout << row(table.header) << "\n";
        for (const auto& r : table.rows) std::cout << row(r) << "\n";
        return;
    }
    // aligned table
    std::vector<std::size_t> width(table.header.size(), 0);
    auto widen = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
    };
    widen(table.header);
    for (const auto& r : table.rows) widen(r);
    auto print = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            std::cout << (i ? "  " : "") << cells[i] << std::string(width[i] - cells[i].size(), ' ');
        std::cout << "\n";
    };
    print(table.header);
    for (const auto& r : table.rows) print(r);
}

std::string join_u64(const std::vector<u64>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

FpElement resolve_epsilon(u64 p, std::optional<u64> override_eps) {
    if (!override_eps) return smallest_nonresidue(p);
    FpElement eps(*override_eps, p);
    if (eps.value == 0 || is_square(eps))
        throw std::domain_error("--epsilon " + std::to_string(*override_eps) +
                                " is not a quadratic non-residue mod " + std::to_string(p));
    return eps;
}

int cmd_degrees(u64 p, std::optional<u64> eps_override, const std::string& format) {
    if (!is_prime(p)) {
        std::cerr << "error: " << p << " is not prime\n";
        return kExitUsage;
    }
    if (p < 5 || in_iq1(p)) {
        std::cerr << "refused: " << p
                  << " is in the base prime set I(1) = {2,3,5,7,11,13,17,37}; the image "
                     "classification, and hence the degree bound, does not apply\n";
        return kExitDomain;
    }
    FpElement eps = resolve_epsilon(p, eps_override);
    DegreeReport rep = degree_lower_bound(p, eps);

    json record = make_record("degrees", {{"prime", p}, {"epsilon", eps.value}});
    record["warnings"].push_back(
        "values are group-theoretic lower bounds; exact when the minimizing image class is "
        "realized by a curve");
    json images = json::array();
    Table table{{"image", "group_order", "min_orbit", "orbit_partition"}, {}};
    for (const ImageOrbitSummary& s : rep.per_image) {
        images.push_back({{"image", image_tag_name(s.tag)},
                          {"group_order", s.group_order},
                          {"min_orbit", s.min_orbit},
                          {"orbit_partition", s.partition}});
        table.rows.push_back({image_tag_name(s.tag), std::to_string(s.group_order),
                              std::to_string(s.min_orbit), join_u64(s.partition, " ")});
    }
    record["results"] = {{"p", rep.p},
                         {"p_mod_3", rep.residue_mod_3},
                         {"per_image", images},
                         {"d_lower", rep.d_lower},
                         {"nonadditive_bound", nonadditive_bound(p)}};
    table.rows.push_back({"d_lower", "", std::to_string(rep.d_lower), ""});
    emit(record, table, format);
    return kExitOk;
}

int cmd_iq(u64 d, bool upper_bound, bool assume_uniformity, const std::string& format) {
    PrimeSet set = upper_bound ? unconditional_upper_bound(d) : conditional_iq(d);
    json record = make_record("iq", {{"d", d},
                                     {"rule", prime_set_rule_name(set.rule)}});
    if (assume_uniformity) record["assumptions"].push_back("serre-uniformity");
    record["results"] = {{"primes", set.primes}, {"count", set.primes.size()}};
    Table table{{"d", "rule", "primes"},
                {{std::to_string(d), prime_set_rule_name(set.rule), join_u64(set.primes, " ")}}};
    emit(record, table, format);
    return kExitOk;
}

int cmd_orbits(const std::string& group, u64 p, u64 power, std::optional<u64> eps_override,
               const std::string& space_name, const std::string& format) {
    if (!is_prime(p) || p < 5) {
        std::cerr << "error: need a prime p >= 5\n";
        return kExitUsage;
    }
    FpElement eps = resolve_epsilon(p, eps_override);
    CatalogEntry entry = [&] {
        if (group == "gl2") return gl2_full(p);
        if (group == "borel") return borel(p);
        if (group == "cns") return nonsplit_cartan(p, eps);
        if (group == "cns+") return nonsplit_cartan_normalizer(p, eps);
        if (group == "cns^e") return cns_power(p, eps, power);
        if (group == "cns+^a") return cns_plus_power(p, eps, power);
        throw CLI::ValidationError("--group", "unknown group " + group);
    }();
    Space space = space_name == "vec" ? Space::NonzeroVectors : Space::ProjectiveLine;
    OrbitPartition part = orbit_partition(entry.group, space);

    json record = make_record("orbits", {{"group", group},
                                         {"prime", p},
                                         {"power", power},
                                         {"epsilon", eps.value},
                                         {"space", space_name}});
    record["results"] = {{"label", entry.group.label()},
                         {"group_order", entry.group.order()},
                         {"min_orbit", part.min_size},
                         {"orbit_partition", part.sizes}};
    Table table{{"group", "order", "min_orbit", "orbit_partition"},
                {{entry.group.label(), std::to_string(entry.group.order()),
                  std::to_string(part.min_size), join_u64(part.sizes, " ")}}};
    emit(record, table, format);
    return kExitOk;
}

int cmd_verify(u64 p_max, u64 d_max, bool skip_oracle, const std::string& format) {
    if (p_max < 5 || p_max > 9973) {
        std::cerr << "error: --pmax must be in [5, 9973]\n";
        return kExitUsage;
    }
    auto results = verify::run_all(p_max, d_max, skip_oracle);
    bool all_pass = true;
    json record = make_record("verify",
                              {{"pmax", p_max}, {"dmax", d_max}, {"skip_oracle", skip_oracle}});
    json checks = json::array();
    Table table{{"check", "status", "cases", "failures"}, {}};
    for (const auto& c : results) {
        all_pass = all_pass && c.pass;
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"cases", c.cases},
                          {"failures", c.failures}});
        table.rows.push_back({c.name, c.pass ? "pass" : "FAIL", std::to_string(c.cases),
                              std::to_string(c.failures.size())});
    }
    record["results"] = {{"checks", checks}, {"all_pass", all_pass}};
    emit(record, table, format);
    return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree bounds for prime isogenies via finite group actions"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));

    u64 prime = 0;
    std::optional<u64> epsilon;
    auto* degrees_cmd = app.add_subcommand("degrees", "per-prime minimal orbit sizes and degree bound");
    degrees_cmd->fallthrough();
    degrees_cmd->add_option("--prime", prime, "prime p")->required();
    degrees_cmd->add_option("--epsilon", epsilon, "non-residue override");

    u64 d = 0;
    bool upper_bound = false, assume_uniformity = false;
    auto* iq_cmd = app.add_subcommand("iq", "prime degree sets for number fields of degree <= d");
    iq_cmd->fallthrough();
    iq_cmd->add_option("--d", d, "degree bound d")->required()->check(CLI::PositiveNumber);
    iq_cmd->add_flag("--upper-bound", upper_bound, "unconditional upper bound set");
    iq_cmd->add_flag("--assume-uniformity", assume_uniformity,
                     "exact set assuming Serre uniformity");

    std::string group = "gl2", space_name = "proj";
    u64 power = 1;
    auto* orbits_cmd = app.add_subcommand("orbits", "orbit partition of a named subgroup");
    orbits_cmd->fallthrough();
    orbits_cmd->add_option("--group", group, "gl2|borel|cns|cns+|cns^e|cns+^a")->required();
    orbits_cmd->add_option("--prime", prime, "prime p")->required();
    orbits_cmd->add_option("--power", power, "exponent for the power kinds")->check(CLI::Range(1, 6));
    orbits_cmd->add_option("--epsilon", epsilon, "non-residue override");
    orbits_cmd->add_option("--space", space_name, "proj|vec")->check(CLI::IsMember({"proj", "vec"}));

    u64 p_max = 31, d_max = 50;
    bool skip_oracle = false;
    auto* verify_cmd = app.add_subcommand("verify", "run the verification battery");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--pmax", p_max, "largest prime to sweep");
    verify_cmd->add_option("--dmax", d_max, "largest d for set cross-validation");
    verify_cmd->add_flag("--skip-oracle", skip_oracle, "skip full-enumeration checks");

    try {
        app.parse(argc, argv);
        if (*degrees_cmd) return cmd_degrees(prime, epsilon, format);
        if (*iq_cmd) {
            if (upper_bound == assume_uniformity) {
                std::cerr << "error: pass exactly one of --upper-bound / --assume-uniformity\n";
                return kExitUsage;
            }
            return cmd_iq(d, upper_bound, assume_uniformity, format);
        }
        if (*orbits_cmd) return cmd_orbits(group, prime, power, epsilon, space_name, format);
        if (*verify_cmd) return cmd_verify(p_max, d_max, skip_oracle, format);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
