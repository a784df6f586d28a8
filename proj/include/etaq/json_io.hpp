#ifndef ETAQ_JSON_IO_HPP
#define ETAQ_JSON_IO_HPP

#include "etaq/basis_search.hpp"
#include "etaq/etacore.hpp"
#include "etaq/identity_lab.hpp"
#include "etaq/qseries.hpp"
#include "etaq/spaces.hpp"

#include <json.hpp>

#include <string>

namespace etaq {

// Interchange formats.  Rationals travel as exact fraction strings ("-16/7");
// eta quotients as {"level": N, "exponents": {"delta": r_delta, ...}}.

std::string rational_to_string(const mpq_class& q);
mpq_class rational_from_string(const std::string& s);

nlohmann::json to_json(const EtaQuotient& f);
EtaQuotient eta_quotient_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QSeries& s);
QSeries qseries_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SpaceSpec& s);
SpaceSpec space_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EtaSum& s);
EtaSum eta_sum_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Certificate& c);

nlohmann::json to_json(const FeasibilityVerdict& v);

/// Identity file: {"space": {...}, "target": name, "terms": [...]}.
struct IdentityFile {
    SpaceSpec space;
    std::string target;
    EtaSum sum;
};
IdentityFile identity_from_json(const nlohmann::json& j);
nlohmann::json to_json(const IdentityFile& f);

} // namespace etaq

#endif
