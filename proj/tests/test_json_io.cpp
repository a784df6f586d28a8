#include "etaq/json_io.hpp"

#include <doctest.h>

#include <random>

using etaq::EtaQuotient;
using etaq::EtaSum;
using etaq::QSeries;
using etaq::SpaceSpec;

TEST_CASE("rational strings") {
    CHECK(etaq::rational_to_string(mpq_class(-16, 7)) == "-16/7");
    CHECK(etaq::rational_to_string(mpq_class(5)) == "5");
    CHECK(etaq::rational_to_string(mpq_class(0)) == "0");
    CHECK(etaq::rational_from_string("-16/7") == mpq_class(-16, 7));
    CHECK(etaq::rational_from_string("49/2") == mpq_class(49, 2));
    CHECK(etaq::rational_from_string("-24") == -24);

    std::mt19937 rng(3);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 97);
    for (int i = 0; i < 200; ++i) {
        mpq_class q(num(rng), den(rng));
        q.canonicalize();
        CHECK(etaq::rational_from_string(etaq::rational_to_string(q)) == q);
    }
}

TEST_CASE("eta quotient round-trip") {
    const EtaQuotient f(20, {{1, -7}, {2, 3}, {4, 4}, {5, 3}, {10, 5}, {20, -4}});
    const auto j = etaq::to_json(f);
    CHECK(j["level"] == 20);
    CHECK(j["exponents"]["20"] == -4);
    CHECK(etaq::eta_quotient_from_json(j) == f);

    const EtaQuotient one(6, {});
    CHECK(etaq::eta_quotient_from_json(etaq::to_json(one)) == one);
}

TEST_CASE("qseries round-trip preserves offset and exact coefficients") {
    const QSeries s = etaq::eta_quotient_expand(EtaQuotient(1, {{1, 24}}), 8) *
                      mpq_class(-16, 7);
    const auto j = etaq::to_json(s);
    CHECK(j["offset24"] == 24);
    CHECK(etaq::qseries_from_json(j) == s);
    // Re-serialization is byte-identical.
    CHECK(etaq::to_json(etaq::qseries_from_json(j)).dump() == j.dump());
}

TEST_CASE("identity file round-trip") {
    etaq::IdentityFile f;
    f.space = SpaceSpec{4, 4, 1};
    f.target = "E4";
    f.sum.terms.push_back({1, EtaQuotient(4, {{1, 16}, {2, -8}})});
    f.sum.terms.push_back({256, EtaQuotient(4, {{1, -8}, {2, 16}})});
    const auto j = etaq::to_json(f);
    const auto g = etaq::identity_from_json(j);
    CHECK(g.space == f.space);
    CHECK(g.target == f.target);
    REQUIRE(g.sum.terms.size() == 2);
    CHECK(g.sum.terms[1].coefficient == 256);
    CHECK(g.sum.terms[1].quotient == f.sum.terms[1].quotient);
}

TEST_CASE("certificate serialization statuses") {
    const QSeries e4 = etaq::eisenstein_level1(4, 20);
    EtaSum sum;
    sum.terms.push_back({1, EtaQuotient(4, {{1, 16}, {2, -8}})});
    sum.terms.push_back({256, EtaQuotient(4, {{1, -8}, {2, 16}})});
    const auto valid = etaq::certify_identity(SpaceSpec{4, 4, 1}, "E4", e4, sum);
    CHECK(etaq::to_json(valid)["status"] == "valid");

    EtaSum bad = sum;
    bad.terms[0].coefficient = 2;
    const auto invalid = etaq::certify_identity(SpaceSpec{4, 4, 1}, "E4", e4, bad);
    CHECK(etaq::to_json(invalid)["status"] == "invalid");

    EtaSum off;
    off.terms.push_back({1, EtaQuotient(4, {{1, 1}})});
    const auto malformed = etaq::certify_identity(SpaceSpec{4, 4, 1}, "E4", e4, off);
    CHECK(etaq::to_json(malformed)["status"] == "malformed");
}

TEST_CASE("feasibility verdict serialization") {
    CHECK(etaq::to_json(etaq::prime_level_feasibility(7, 1))["status"] ==
          "infeasible-congruence");
    CHECK(etaq::to_json(etaq::prime_level_feasibility(5, 1))["status"] ==
          "infeasible-parity");
    CHECK(etaq::to_json(etaq::prime_level_feasibility(3, 1))["status"] == "feasible");
}
