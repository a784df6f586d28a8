#include "etaq/json_io.hpp"
#include "etaq/errors.hpp"

#include <stdexcept>

namespace etaq {

using nlohmann::json;

std::string rational_to_string(const mpq_class& q) {
    return q.get_str();
}

mpq_class rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed rational: " + s);
    }
    q.canonicalize();
    return q;
}

json to_json(const EtaQuotient& f) {
    json exps = json::object();
    for (const auto& [delta, r] : f.exponents) {
        exps[std::to_string(delta)] = r;
    }
    return json{{"level", f.level}, {"exponents", exps}};
}

EtaQuotient eta_quotient_from_json(const json& j) {
    const long level = j.at("level").get<long>();
    std::map<long, long> exps;
    if (j.contains("exponents")) {
        for (const auto& [key, value] : j.at("exponents").items()) {
            exps[std::stol(key)] = value.get<long>();
        }
    }
    return EtaQuotient(level, std::move(exps));
}

json to_json(const QSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) {
        coeffs.push_back(rational_to_string(c));
    }
    return json{{"offset24", s.offset24()}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const json& j) {
    std::vector<mpq_class> coeffs;
    for (const auto& c : j.at("coeffs")) {
        coeffs.push_back(rational_from_string(c.get<std::string>()));
    }
    return QSeries(j.at("offset24").get<long>(), std::move(coeffs));
}

json to_json(const SpaceSpec& s) {
    return json{{"level", s.level}, {"weight", s.weight}, {"character", s.character_discriminant}};
}

SpaceSpec space_from_json(const json& j) {
    SpaceSpec s;
    s.level = j.at("level").get<long>();
    s.weight = j.at("weight").get<long>();
    s.character_discriminant = j.value("character", 1L);
    return s;
}

json to_json(const EtaSum& s) {
    json terms = json::array();
    for (const auto& t : s.terms) {
        terms.push_back(json{{"coeff", rational_to_string(t.coefficient)},
                             {"quotient", to_json(t.quotient)}});
    }
    return json{{"terms", terms}};
}

EtaSum eta_sum_from_json(const json& j) {
    EtaSum s;
    for (const auto& t : j.at("terms")) {
        s.terms.push_back({rational_from_string(t.at("coeff").get<std::string>()),
                           eta_quotient_from_json(t.at("quotient"))});
    }
    return s;
}

json to_json(const Certificate& c) {
    const char* status = c.status == CertStatus::Valid     ? "valid"
                         : c.status == CertStatus::Invalid ? "invalid"
                                                           : "malformed";
    json out{{"space", to_json(c.space)},
             {"target", c.target_name},
             {"terms", to_json(c.sum)["terms"]},
             {"verified_bound", c.verified_bound},
             {"matched_coefficients", c.matched_coefficients},
             {"status", status},
             {"detail", c.detail}};
    if (c.status == CertStatus::Invalid) {
        out["first_mismatch"] = c.first_mismatch;
    }
    return out;
}

json to_json(const FeasibilityVerdict& v) {
    const char* status = v.status == Feasibility::Feasible ? "feasible"
                         : v.status == Feasibility::InfeasibleCongruence
                             ? "infeasible-congruence"
                             : "infeasible-parity";
    return json{{"status", status}, {"detail", v.detail}};
}

IdentityFile identity_from_json(const json& j) {
    IdentityFile f;
    f.space = space_from_json(j.at("space"));
    f.target = j.value("target", std::string{});
    f.sum = eta_sum_from_json(j);
    return f;
}

json to_json(const IdentityFile& f) {
    json out = to_json(f.sum);
    out["space"] = to_json(f.space);
    out["target"] = f.target;
    return out;
}

} // namespace etaq
