#include "etaq/basis_search.hpp"
#include "etaq/errors.hpp"
#include "etaq/identity_lab.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using etaq::CertStatus;
using etaq::EtaQuotient;
using etaq::EtaSum;
using etaq::QSeries;
using etaq::SpaceSpec;

namespace {

std::vector<EtaQuotient> level4_e4_basis() {
    return {EtaQuotient(4, {{1, 16}, {2, -8}}), EtaQuotient(4, {{1, -8}, {2, 16}})};
}

std::vector<EtaQuotient> level4_e6_basis() {
    return {EtaQuotient(4, {{1, 24}, {2, -12}}), EtaQuotient(4, {{2, 12}}),
            EtaQuotient(4, {{1, -8}, {2, 12}, {4, 8}}), EtaQuotient(4, {{2, -12}, {4, 24}})};
}

std::vector<EtaQuotient> level20_basis() {
    return {
        EtaQuotient(20, {{1, -7}, {2, 3}, {4, 4}, {5, 3}, {10, 5}, {20, -4}}),
        EtaQuotient(20, {{1, -7}, {2, 7}, {4, 2}, {5, 3}, {10, 1}, {20, -2}}),
        EtaQuotient(20, {{1, -7}, {2, 7}, {4, 7}, {5, -5}, {10, 5}, {20, -3}}),
        EtaQuotient(20, {{1, -6}, {4, 4}, {5, 6}, {10, 4}, {20, -4}}),
        EtaQuotient(20, {{1, -6}, {2, 4}, {4, 2}, {5, 6}, {20, -2}}),
        EtaQuotient(20, {{1, -6}, {2, 4}, {4, 7}, {5, -2}, {10, 4}, {20, -3}}),
    };
}

} // namespace

TEST_CASE("decompose E4 over the two level-4 quotients") {
    const auto res = etaq::decompose_in_basis(etaq::eisenstein_level1(4, 12),
                                              level4_e4_basis(), 10);
    REQUIRE(res.status == etaq::DecomposeResult::Status::Success);
    REQUIRE(res.sum.terms.size() == 2);
    CHECK(res.sum.terms[0].coefficient == 1);
    CHECK(res.sum.terms[1].coefficient == 256);
}

TEST_CASE("decompose E6 over the four level-4 quotients") {
    const auto res = etaq::decompose_in_basis(etaq::eisenstein_level1(6, 16),
                                              level4_e6_basis(), 12);
    REQUIRE(res.status == etaq::DecomposeResult::Status::Success);
    REQUIRE(res.sum.terms.size() == 4);
    CHECK(res.sum.terms[0].coefficient == 1);
    CHECK(res.sum.terms[1].coefficient == -480);
    CHECK(res.sum.terms[2].coefficient == -16896);
    CHECK(res.sum.terms[3].coefficient == 8192);
}

TEST_CASE("decompose the weight-2 level-5 Eisenstein series at level 20") {
    // Over a genuine rank basis of holomorphic level-20 quotients the
    // decomposition is exact and re-verifies.
    etaq::SearchBounds bounds;
    bounds.r_max = 8;
    const auto enumerated = etaq::enumerate_eta_quotients(20, 2, bounds, 1);
    const auto basis = etaq::prune_to_rank_basis(enumerated.quotients,
                                                 etaq::sturm_bound(20, 2) + 1);
    const auto res = etaq::decompose_in_basis(etaq::eisenstein_weight2_level_p(5, 12),
                                              basis, 10);
    REQUIRE(res.status == etaq::DecomposeResult::Status::Success);
    const QSeries recombined = etaq::eta_sum_expand(res.sum, 31);
    const QSeries target = etaq::eisenstein_weight2_level_p(5, 31);
    CHECK(QSeries::agree_to(recombined, target, 30));
}

TEST_CASE("the six published level-20 quotients do not reach the target") {
    // The printed exponent lists are independent as q-series but carry a pole
    // at the cusp 0, and the published combination fails beyond q^0.
    const auto res = etaq::decompose_in_basis(etaq::eisenstein_weight2_level_p(5, 12),
                                              level20_basis(), 10);
    CHECK(res.status == etaq::DecomposeResult::Status::NoSolution);
    for (const auto& f : level20_basis()) {
        CHECK_FALSE(etaq::is_holomorphic_form(f));
        CHECK(etaq::cusp_order(f, 1) < 0);
    }
}

TEST_CASE("decomposition failure modes") {
    // A target outside the span of a single quotient.
    const auto basis = level20_basis();
    const auto no = etaq::decompose_in_basis(etaq::eisenstein_weight2_level_p(3, 12),
                                             {basis[0]}, 10);
    CHECK(no.status == etaq::DecomposeResult::Status::NoSolution);

    const auto low = etaq::decompose_in_basis(etaq::eisenstein_weight2_level_p(5, 12),
                                              basis, 3);
    CHECK(low.status == etaq::DecomposeResult::Status::InsufficientPrecision);
}

TEST_CASE("roundtrip: random combinations decompose to their coefficients") {
    const auto basis = level20_basis();
    const long precision = 10;
    std::vector<QSeries> expansions;
    for (const auto& f : basis) {
        expansions.push_back(etaq::eta_quotient_expand(f, precision + 2));
    }
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 6);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<mpq_class> v;
        QSeries target = QSeries::zero(24 * (precision + 1));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            mpq_class c(num(rng), den(rng));
            c.canonicalize();
            v.push_back(c);
            target = target + expansions[i] * c;
        }
        const auto res = etaq::decompose_in_basis(target, basis, precision);
        REQUIRE(res.status == etaq::DecomposeResult::Status::Success);
        std::size_t t = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (v[i] == 0) {
                continue;
            }
            REQUIRE(t < res.sum.terms.size());
            CHECK(res.sum.terms[t].quotient == basis[i]);
            CHECK(res.sum.terms[t].coefficient == v[i]);
            ++t;
        }
        CHECK(t == res.sum.terms.size());
    }
}

TEST_CASE("certification of the E4 identity") {
    EtaSum sum;
    sum.terms.push_back({1, EtaQuotient(4, {{1, 16}, {2, -8}})});
    sum.terms.push_back({256, EtaQuotient(4, {{1, -8}, {2, 16}})});
    const SpaceSpec space{4, 4, 1};

    const auto cert = etaq::certify_identity(space, "E4", etaq::eisenstein_level1(4, 40),
                                             sum, 30);
    CHECK(cert.status == CertStatus::Valid);
    CHECK(cert.verified_bound >= etaq::sturm_bound(4, 4) + 1);
    CHECK(cert.matched_coefficients >= 31);

    // Perturbation flips the verdict at the first divergent coefficient.
    EtaSum bad = sum;
    bad.terms[1].coefficient = 255;
    const auto invalid = etaq::certify_identity(space, "E4", etaq::eisenstein_level1(4, 40),
                                                bad, 30);
    CHECK(invalid.status == CertStatus::Invalid);
    CHECK(invalid.first_mismatch == 1); // the second term starts at q^1
}

TEST_CASE("weight-inhomogeneous identities are malformed, term index reported") {
    EtaSum e22;
    e22.terms.push_back({1, EtaQuotient(8, {{1, -8}, {2, 20}, {4, -8}})});
    e22.terms.push_back({16, EtaQuotient(8, {{2, -4}, {8, 1}})});
    const auto cert = etaq::certify_identity(SpaceSpec{8, 2, 1}, "Ep2:2",
                                             etaq::eisenstein_weight2_level_p(2, 20), e22);
    CHECK(cert.status == CertStatus::Malformed);
    CHECK(cert.detail.find("term 2") != std::string::npos);
    CHECK(cert.detail.find("-3/2") != std::string::npos);
}

TEST_CASE("level-1 polynomial decomposition") {
    const QSeries delta = etaq::eta_quotient_expand(EtaQuotient(1, {{1, 24}}), 50);
    const auto res = etaq::level1_polynomial_decomposition(delta, 12);
    REQUIRE(res.exact);
    REQUIRE(res.coefficients.size() == 2);
    CHECK(res.coefficients.at({3, 0}) == mpq_class(1, 1728));
    CHECK(res.coefficients.at({0, 2}) == mpq_class(-1, 1728));

    const QSeries e4sq = (etaq::eisenstein_level1(4, 20) * etaq::eisenstein_level1(4, 20));
    const auto tauto = etaq::level1_polynomial_decomposition(e4sq, 8);
    REQUIRE(tauto.exact);
    REQUIRE(tauto.coefficients.size() == 1);
    CHECK(tauto.coefficients.at({2, 0}) == 1);

    const auto constant = etaq::level1_polynomial_decomposition(QSeries::one(5), 0);
    REQUIRE(constant.exact);
    CHECK(constant.coefficients.at({0, 0}) == 1);

    // Random monomial combinations reconstruct exactly.
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> coeff(-8, 8);
    for (int trial = 0; trial < 20; ++trial) {
        const long k = 4 * (1 + trial % 5) + 12; // even weights 16..32
        const QSeries e4 = etaq::eisenstein_level1(4, 50);
        const QSeries e6 = etaq::eisenstein_level1(6, 50);
        QSeries target = QSeries::zero(24 * 50);
        std::map<std::pair<long, long>, mpq_class> chosen;
        for (long alpha = 0; 4 * alpha <= k; ++alpha) {
            if ((k - 4 * alpha) % 6 != 0) {
                continue;
            }
            const long beta = (k - 4 * alpha) / 6;
            const mpq_class c(coeff(rng));
            if (c == 0) {
                continue;
            }
            chosen[{alpha, beta}] = c;
            target = target + (e4.pow(alpha) * e6.pow(beta)).truncated(50) * c;
        }
        if (target.is_zero()) {
            continue;
        }
        const auto rec = etaq::level1_polynomial_decomposition(target, k);
        REQUIRE(rec.exact);
        CHECK(rec.coefficients == chosen);
    }
}

TEST_CASE("weight-zero exponent selection") {
    CHECK(etaq::weight_zero_exponents(12).a == 0);
    CHECK(etaq::weight_zero_exponents(12).b == 0);
    CHECK(etaq::weight_zero_exponents(12).c == 1);
    CHECK(etaq::weight_zero_exponents(2).a == 1);
    CHECK(etaq::weight_zero_exponents(2).b == 1);
    CHECK(etaq::weight_zero_exponents(2).c == 1);
    CHECK(etaq::weight_zero_exponents(8).a == 1);
    CHECK(etaq::weight_zero_exponents(8).b == 0);
    CHECK(etaq::weight_zero_exponents(8).c == 1);
    for (long k = 0; k <= 100; k += 2) {
        const auto e = etaq::weight_zero_exponents(k);
        CHECK(k + 4 * e.a + 6 * e.b - 12 * e.c == 0);
        CHECK(e.a >= 0);
        CHECK(e.a <= 2);
        CHECK(e.b >= 0);
        CHECK(e.b <= 1);
    }
}

TEST_CASE("weight-zero function pipelines") {
    const long p = 35;
    const QSeries delta = etaq::eta_quotient_expand(EtaQuotient(1, {{1, 24}}), p);
    const QSeries one_like = etaq::weight_zero_function(delta, 12, p);
    CHECK(one_like.offset24() == 0);
    CHECK(one_like.coeff_q(0) == 1);
    for (long n = 1; n < 30; ++n) {
        CHECK(one_like.coeff_q(n) == 0);
    }

    const QSeries j = etaq::j_invariant_series(1, p);
    CHECK(QSeries::agree_to(etaq::weight_zero_function(etaq::eisenstein_level1(4, p), 4, p),
                            j, 30));

    // E6^2 / Delta = j - 1728
    const QSeries lhs = etaq::weight_zero_function(etaq::eisenstein_level1(6, p), 6, p);
    const QSeries rhs = j + QSeries::monomial(-1728, 0, p);
    CHECK(QSeries::agree_to(lhs, rhs, 30));
}

TEST_CASE("j-invariant series") {
    const QSeries j = etaq::j_invariant_series(1, 10);
    CHECK(j.offset24() == -24);
    CHECK(j.coeff_q(-1) == 1);
    CHECK(j.coeff_q(0) == 744);
    CHECK(j.coeff_q(1) == 196884);
    CHECK(j.coeff_q(2) == 21493760);

    CHECK(etaq::j_invariant_series(2, 8).offset24() == -48);

    // j * Delta = E4^3 exactly.
    const long p = 100;
    const QSeries prod = etaq::j_invariant_series(1, p + 2) *
                         etaq::eta_quotient_expand(EtaQuotient(1, {{1, 24}}), p + 2);
    CHECK(QSeries::agree_to(prod, etaq::eisenstein_level1(4, p + 2).pow(3), p));
}

TEST_CASE("j from the eta route agrees with the Eisenstein route") {
    const long p = 105;
    const QSeries a = etaq::j_from_eta_route(p);
    const QSeries b = etaq::j_invariant_series(1, p);
    CHECK(QSeries::agree_to(a, b, 100));
    CHECK(a.offset24() == -24);
    CHECK(a.coeff_q(0) == 744);
}

TEST_CASE("prime-power level feasibility") {
    CHECK(etaq::prime_level_feasibility(7, 1).status == etaq::Feasibility::InfeasibleCongruence);
    CHECK(etaq::prime_level_feasibility(5, 1).status == etaq::Feasibility::InfeasibleParity);
    CHECK(etaq::prime_level_feasibility(3, 3).status == etaq::Feasibility::Feasible);
    CHECK(etaq::prime_level_feasibility(2, 1).status == etaq::Feasibility::Feasible);
    for (long p : {7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L,
                   47L, 53L, 59L, 61L, 67L, 71L, 73L, 79L, 83L, 89L, 97L}) {
        for (long r = 1; r <= 4; ++r) {
            CHECK(etaq::prime_level_feasibility(p, r).status ==
                  etaq::Feasibility::InfeasibleCongruence);
        }
    }
    CHECK_THROWS_AS(etaq::prime_level_feasibility(6, 1), etaq::not_prime_error);
}
