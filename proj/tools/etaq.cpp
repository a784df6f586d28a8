// etaq: command-line front end for the eta-quotient toolkit.
//
// Machine-readable JSON goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 verification-negative, 2 usage or input error.

#include "etaq/basis_search.hpp"
#include "etaq/errors.hpp"
#include "etaq/etacore.hpp"
#include "etaq/identity_lab.hpp"
#include "etaq/json_io.hpp"
#include "etaq/qseries.hpp"
#include "etaq/spaces.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

json read_json_input(const std::string& path) {
    if (path == "-") {
        return json::parse(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return json::parse(in);
}

// --precision beats ETAQ_PRECISION beats sturm_bound + 10.
long effective_precision(long cli_precision, long level, long weight) {
    if (cli_precision > 0) {
        return cli_precision;
    }
    if (const char* env = std::getenv("ETAQ_PRECISION")) {
        const long p = std::strtol(env, nullptr, 10);
        if (p > 0) {
            return p;
        }
    }
    return etaq::sturm_bound(level, weight) + 10;
}

// Resolves a target name (E4 | E6 | Ep2:p | file:path or a bare path) to a
// q-expansion with at least `precision` integer coefficients.
etaq::QSeries resolve_target(const std::string& name, long precision) {
    if (name == "E4") {
        return etaq::eisenstein_level1(4, precision);
    }
    if (name == "E6") {
        return etaq::eisenstein_level1(6, precision);
    }
    if (name.rfind("Ep2:", 0) == 0) {
        return etaq::eisenstein_weight2_level_p(std::stol(name.substr(4)), precision);
    }
    const std::string path = name.rfind("file:", 0) == 0 ? name.substr(5) : name;
    return etaq::qseries_from_json(read_json_input(path));
}

void emit(const json& payload) {
    std::cout << payload.dump(2) << "\n";
}

int cmd_expand(const std::string& input, long precision) {
    const etaq::EtaQuotient f = etaq::eta_quotient_from_json(read_json_input(input));
    const long p = effective_precision(precision, f.level, 4);
    emit(etaq::to_json(etaq::eta_quotient_expand(f, p)));
    return 0;
}

int cmd_check(const std::string& input) {
    const etaq::EtaQuotient f = etaq::eta_quotient_from_json(read_json_input(input));
    const etaq::LigozatReport rep = etaq::ligozat_check(f);
    json out{{"quotient", etaq::to_json(f)},
             {"ligozat",
              {{"cond_delta", rep.cond_delta},
               {"cond_level_over_delta", rep.cond_level_over_delta},
               {"integral_weight", rep.integral_weight}}},
             {"weight", etaq::rational_to_string(etaq::eq_weight(f))},
             {"holomorphic", etaq::is_holomorphic_form(f)}};
    if (rep.integral_weight) {
        const etaq::CharacterDescriptor chi = etaq::eq_character(f);
        out["character"] = {{"s", etaq::rational_to_string(chi.s_value)},
                            {"discriminant", chi.discriminant.get_str()},
                            {"certified", chi.certified}};
    }
    emit(out);
    return rep.all() ? 0 : 1;
}

int cmd_basis(long level, long weight, long rmax, long character, long precision,
              long max_results) {
    etaq::SearchBounds bounds;
    bounds.r_max = rmax;
    bounds.max_results = max_results;
    const auto enumerated = etaq::enumerate_eta_quotients(level, weight, bounds, character);
    const long p = effective_precision(precision, level, weight);
    const auto basis = etaq::prune_to_rank_basis(enumerated.quotients, p);
    json quotients = json::array();
    for (const auto& f : basis) {
        quotients.push_back(etaq::to_json(f));
    }
    emit(json{{"level", level},
              {"weight", weight},
              {"character", character},
              {"complete", enumerated.complete},
              {"candidates", enumerated.quotients.size()},
              {"quotients", quotients}});
    return 0;
}

int cmd_decompose(const std::string& basis_input, const std::string& target, long precision) {
    std::vector<etaq::EtaQuotient> basis;
    for (const auto& q : read_json_input(basis_input)) {
        basis.push_back(etaq::eta_quotient_from_json(q));
    }
    if (basis.empty()) {
        std::cerr << "error: empty basis\n";
        return 2;
    }
    const long weight = etaq::eq_weight(basis.front()).get_num().get_si();
    const long p = effective_precision(precision, basis.front().level, weight);
    const etaq::QSeries t = resolve_target(target, p);
    const auto res = etaq::decompose_in_basis(t, basis, p);
    switch (res.status) {
    case etaq::DecomposeResult::Status::Success:
        emit(json{{"status", "success"}, {"target", target}, {"terms", etaq::to_json(res.sum)["terms"]}});
        return 0;
    case etaq::DecomposeResult::Status::NoSolution:
        emit(json{{"status", "no-solution"}, {"target", target}});
        return 1;
    case etaq::DecomposeResult::Status::Underdetermined:
        emit(json{{"status", "underdetermined"}, {"kernel_dim", res.kernel_dim}, {"target", target}});
        return 1;
    default:
        emit(json{{"status", "insufficient-precision"}, {"target", target}});
        return 2;
    }
}

int cmd_certify(const std::string& input, std::string target, long precision) {
    const etaq::IdentityFile identity = etaq::identity_from_json(read_json_input(input));
    if (target.empty()) {
        target = identity.target;
    }
    if (target.empty()) {
        std::cerr << "error: no target named in the identity file or on the command line\n";
        return 2;
    }
    const long bound = etaq::sturm_bound(identity.space.level, identity.space.weight) + 1;
    const long p = std::max(effective_precision(precision, identity.space.level,
                                                identity.space.weight),
                            bound + 1);
    const etaq::QSeries t = resolve_target(target, p + 1);
    const etaq::Certificate cert =
        etaq::certify_identity(identity.space, target, t, identity.sum, p - 1);
    emit(etaq::to_json(cert));
    return cert.status == etaq::CertStatus::Valid ? 0 : 1;
}

int cmd_dims(long prime, long weight) {
    emit(json{{"prime", prime},
              {"weight", weight},
              {"genus", etaq::genus_X0p(prime)},
              {"dim_cusp", etaq::dim_cusp_gamma0p(prime, weight)},
              {"dim_eisenstein", etaq::dim_eisenstein_gamma0p(prime, weight)}});
    return 0;
}

int cmd_sturm(long level, long weight) {
    emit(json{{"level", level}, {"weight", weight}, {"sturm_bound", etaq::sturm_bound(level, weight)}});
    return 0;
}

int cmd_partition(long n) {
    const auto p = etaq::partition_numbers(n);
    emit(json{{"n", n}, {"p", p.back().get_str()}});
    return 0;
}

int cmd_j(long m, long precision) {
    const long p = precision > 0 ? precision : 20;
    emit(etaq::to_json(etaq::j_invariant_series(m, p)));
    return 0;
}

int cmd_feasible(long prime, long power, long weight) {
    const auto verdict = etaq::prime_level_feasibility(prime, power, weight);
    json out = etaq::to_json(verdict);
    out["prime"] = prime;
    out["power"] = power;
    out["weight"] = weight;
    emit(out);
    return verdict.status == etaq::Feasibility::Feasible ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"eta-quotient toolkit: expand, check, search and certify "
                 "eta-quotient representations of modular forms"};
    app.require_subcommand(1);

    std::string json_input = "-";
    std::string target;
    long precision = 0, level = 1, weight = 2, rmax = 24, character = 1;
    long prime = 2, power = 1, n = 0, m = 1, max_results = 100000;

    auto* expand = app.add_subcommand("expand", "q-expansion of an eta quotient");
    expand->add_option("--json", json_input, "EtaQuotient JSON (file path or - for stdin)");
    expand->add_option("--precision", precision, "number of coefficients");

    auto* check = app.add_subcommand("check", "modularity congruences, weight and character");
    check->add_option("--json", json_input, "EtaQuotient JSON (file path or - for stdin)");

    auto* basis = app.add_subcommand("basis", "enumerate holomorphic eta quotients and prune to a rank basis");
    basis->add_option("--level", level)->required();
    basis->add_option("--weight", weight)->required();
    basis->add_option("--rmax", rmax, "per-divisor exponent cap");
    basis->add_option("--character", character, "character discriminant (1 = trivial)");
    basis->add_option("--precision", precision);
    basis->add_option("--max-results", max_results);

    auto* decompose = app.add_subcommand("decompose", "exact coefficients of a target over a quotient basis");
    decompose->add_option("--json", json_input, "JSON array of EtaQuotient (file path or -)");
    decompose->add_option("--target", target, "E4 | E6 | Ep2:p | file:path")->required();
    decompose->add_option("--precision", precision);

    auto* certify = app.add_subcommand("certify", "certify an identity file against a target expansion");
    certify->add_option("--json", json_input, "identity JSON (file path or - for stdin)");
    certify->add_option("--target", target, "overrides the target named in the file");
    certify->add_option("--precision", precision);

    auto* dims = app.add_subcommand("dims", "dimension data for prime level");
    dims->add_option("--prime", prime)->required();
    dims->add_option("--weight", weight)->required();

    auto* sturm = app.add_subcommand("sturm", "Sturm bound for M_k(Gamma0(N))");
    sturm->add_option("--level", level)->required();
    sturm->add_option("--weight", weight)->required();

    auto* partition = app.add_subcommand("partition", "partition number p(n)");
    partition->add_option("--n", n)->required();

    auto* jcmd = app.add_subcommand("j", "q-expansion of j(q^m)");
    jcmd->add_option("--m", m);
    jcmd->add_option("--precision", precision);

    auto* feasible = app.add_subcommand("feasible", "prime-power level feasibility diagnostic");
    feasible->add_option("--prime", prime)->required();
    feasible->add_option("--power", power)->required();
    feasible->add_option("--weight", weight);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (expand->parsed()) {
            return cmd_expand(json_input, precision);
        }
        if (check->parsed()) {
            return cmd_check(json_input);
        }
        if (basis->parsed()) {
            return cmd_basis(level, weight, rmax, character, precision, max_results);
        }
        if (decompose->parsed()) {
            return cmd_decompose(json_input, target, precision);
        }
        if (certify->parsed()) {
            return cmd_certify(json_input, target, precision);
        }
        if (dims->parsed()) {
            return cmd_dims(prime, weight);
        }
        if (sturm->parsed()) {
            return cmd_sturm(level, weight);
        }
        if (partition->parsed()) {
            return cmd_partition(n);
        }
        if (jcmd->parsed()) {
            return cmd_j(m, precision);
        }
        if (feasible->parsed()) {
            return cmd_feasible(prime, power, weight);
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
