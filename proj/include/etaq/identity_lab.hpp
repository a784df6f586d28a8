#ifndef ETAQ_IDENTITY_LAB_HPP
#define ETAQ_IDENTITY_LAB_HPP

#include "etaq/etacore.hpp"
#include "etaq/qseries.hpp"
#include "etaq/spaces.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace etaq {

/// A formal rational-coefficient linear combination of eta quotients.
struct EtaSum {
    struct Term {
        mpq_class coefficient;
        EtaQuotient quotient;
    };
    std::vector<Term> terms;
};

/// Expansion of the sum to `precision` coefficients.  All terms must share
/// a coefficient grid (guaranteed when every term passes the mod-24 checks).
QSeries eta_sum_expand(const EtaSum& sum, long precision);

enum class CertStatus { Valid, Invalid, Malformed };

/// Machine-checkable record that an EtaSum matches a target q-expansion
/// through verified_bound.
struct Certificate {
    SpaceSpec space;
    std::string target_name;
    EtaSum sum;
    long verified_bound = -1;
    long matched_coefficients = 0;
    CertStatus status = CertStatus::Malformed;
    long first_mismatch = -1; // q-index of the first divergence (Invalid only)
    std::string detail;
};

struct DecomposeResult {
    enum class Status { Success, NoSolution, Underdetermined, InsufficientPrecision } status;
    EtaSum sum;          // Success only
    long kernel_dim = 0; // Underdetermined only
};

/// Exact coefficients expressing `target` in the span of the expansions of
/// `basis`, matched on q^0 ... q^{precision-1}.  The result is re-verified
/// by recomputing the combined expansion.
DecomposeResult decompose_in_basis(const QSeries& target,
                                   const std::vector<EtaQuotient>& basis,
                                   long precision);

/// Validates every term (level, weight homogeneity, modularity congruences),
/// expands the sum and compares against `target`.  Comparison runs through
/// max(sturm_bound + 1, min_bound) coefficients; Valid requires agreement on
/// all of them.  All failure modes are statuses, never exceptions.
Certificate certify_identity(const SpaceSpec& space, const std::string& target_name,
                             const QSeries& target, const EtaSum& sum,
                             long min_bound = 0);

/// Exact coefficients of the monomials E4^alpha E6^beta (4 alpha + 6 beta = k)
/// expressing a level-1 form of even weight k.  Throws out_of_domain_error /
/// insufficient_precision_error; an inexact fit reports NoSolution via the
/// returned flag pair.
struct Level1Decomposition {
    bool exact = false;
    std::map<std::pair<long, long>, mpq_class> coefficients; // (alpha, beta) -> c
};
Level1Decomposition level1_polynomial_decomposition(const QSeries& target, long k);

/// The unique a in {0,1,2}, b in {0,1} with k + 4a + 6b divisible by 12,
/// and c = (k + 4a + 6b)/12.
struct WeightZeroExponents {
    long a = 0;
    long b = 0;
    long c = 0;
};
WeightZeroExponents weight_zero_exponents(long k);

/// f * E4^a * E6^b / Delta^c, a weight-0 expansion (possibly with a pole at
/// the cusp infinity).  Throws zero_series_error when f = 0.
QSeries weight_zero_function(const QSeries& f, long k, long precision);

/// Expansion of j(q^m) where j = E4^3 / Delta; leading exponent is -m.
QSeries j_invariant_series(long m, long precision);

/// j computed through eta machinery only: the two-term level-4 eta sum for
/// E4 is cubed and divided by the eta product for Delta.
QSeries j_from_eta_route(long precision);

enum class Feasibility { Feasible, InfeasibleCongruence, InfeasibleParity };

struct FeasibilityVerdict {
    Feasibility status;
    std::string detail;
};

/// Necessary-condition check for writing a weight-k Eisenstein series with
/// nonzero constant term as a sum of eta quotients of level p^r: the exponent
/// equations force (p-1) | 2k, and for p = 5 a parity refinement applies.
/// Feasible means only that the congruence passes.
FeasibilityVerdict prime_level_feasibility(long p, long r, long k = 2);

} // namespace etaq

#endif
