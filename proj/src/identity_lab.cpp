#include "etaq/identity_lab.hpp"
#include "etaq/errors.hpp"
#include "etaq/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace etaq {

namespace {

long floor_div24(long x) {
    return x >= 0 ? x / 24 : -((-x + 23) / 24);
}

// Extracts coefficients of q^lo ... q^hi as a dense column.
QVector integer_coeff_window(const QSeries& s, long lo, long hi) {
    QVector v(static_cast<std::size_t>(hi - lo + 1));
    for (long n = lo; n <= hi; ++n) {
        v[static_cast<std::size_t>(n - lo)] = s.coeff_q(n);
    }
    return v;
}

} // namespace

QSeries eta_sum_expand(const EtaSum& sum, long precision) {
    QSeries acc = QSeries::zero(24 * precision);
    for (const auto& term : sum.terms) {
        acc = acc + eta_quotient_expand(term.quotient, precision) * term.coefficient;
    }
    return acc;
}

DecomposeResult decompose_in_basis(const QSeries& target,
                                   const std::vector<EtaQuotient>& basis,
                                   long precision) {
    if (basis.empty()) {
        throw out_of_domain_error("empty basis");
    }
    const long level = basis.front().level;
    const mpq_class weight = eq_weight(basis.front());
    for (const auto& f : basis) {
        if (f.level != level || eq_weight(f) != weight) {
            throw out_of_domain_error("basis must share level and weight");
        }
    }
    if (weight.get_den() != 1) {
        throw half_integral_weight_error("decomposition requires integral weight");
    }
    const long bound = sturm_bound(level, weight.get_num().get_si());
    if (precision < bound + 1) {
        return {DecomposeResult::Status::InsufficientPrecision, {}, 0};
    }
    if (!target.is_zero() && target.offset24() % 24 != 0) {
        throw out_of_domain_error("target has a fractional leading exponent");
    }
    if (target.known_to_24() < 24 * precision) {
        return {DecomposeResult::Status::InsufficientPrecision, {}, 0};
    }

    std::vector<QSeries> expansions;
    long lo = std::min(0L, target.is_zero() ? 0L : floor_div24(target.offset24()));
    for (const auto& f : basis) {
        if (f.weighted_exponent_sum() % 24 != 0) {
            throw out_of_domain_error("basis element has a fractional leading exponent");
        }
        // Enough coefficients that every column covers q^lo ... q^{precision-1}.
        const long off = f.weighted_exponent_sum() / 24;
        lo = std::min(lo, off);
        expansions.push_back(eta_quotient_expand(f, precision + std::max(0L, -off)));
    }

    const long hi = precision - 1;
    QMatrix a(static_cast<std::size_t>(hi - lo + 1),
              QVector(basis.size()));
    for (std::size_t col = 0; col < basis.size(); ++col) {
        QVector column = integer_coeff_window(expansions[col], lo, hi);
        for (std::size_t row = 0; row < column.size(); ++row) {
            a[row][col] = column[row];
        }
    }
    const QVector rhs = integer_coeff_window(target, lo, hi);

    const SolveResult solved = solve_exact(a, rhs);
    if (solved.status == SolveResult::Status::NoSolution) {
        return {DecomposeResult::Status::NoSolution, {}, 0};
    }
    if (solved.status == SolveResult::Status::Underdetermined) {
        return {DecomposeResult::Status::Underdetermined, {}, solved.kernel_dim};
    }

    EtaSum sum;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (solved.solution[i] != 0) {
            sum.terms.push_back({solved.solution[i], basis[i]});
        }
    }
    // Re-verify by full recomputation of the combined expansion.
    const QSeries recombined = eta_sum_expand(sum, precision + std::max(0L, -lo));
    for (long n = lo; n <= hi; ++n) {
        if (recombined.coeff_q(n) != target.coeff_q(n)) {
            return {DecomposeResult::Status::NoSolution, {}, 0};
        }
    }
    return {DecomposeResult::Status::Success, std::move(sum), 0};
}

Certificate certify_identity(const SpaceSpec& space, const std::string& target_name,
                             const QSeries& target, const EtaSum& sum,
                             long min_bound) {
    Certificate cert;
    cert.space = space;
    cert.target_name = target_name;
    cert.sum = sum;

    // Structural validation precedes any series expansion.
    for (std::size_t i = 0; i < sum.terms.size(); ++i) {
        const auto& term = sum.terms[i];
        std::ostringstream msg;
        if (term.quotient.level != space.level) {
            msg << "term " << i + 1 << " has level " << term.quotient.level
                << ", space level " << space.level;
            cert.detail = msg.str();
            return cert;
        }
        const mpq_class w = eq_weight(term.quotient);
        if (w != space.weight) {
            msg << "term " << i + 1 << " has weight " << w << ", space weight "
                << space.weight;
            cert.detail = msg.str();
            return cert;
        }
        if (!ligozat_check(term.quotient).all()) {
            msg << "term " << i + 1 << " fails the modularity congruences";
            cert.detail = msg.str();
            return cert;
        }
    }

    const long bound = std::max(sturm_bound(space.level, space.weight) + 1, min_bound);
    if (target.known_to_24() <= 24 * bound) {
        cert.detail = "target series truncated before the verification bound";
        return cert;
    }

    long min_off = 0;
    for (const auto& term : sum.terms) {
        min_off = std::min(min_off, floor_div24(term.quotient.weighted_exponent_sum()));
    }
    const QSeries expansion = eta_sum_expand(sum, bound + 1 - min_off);

    const long start = std::min({0L, min_off,
                                 target.is_zero() ? 0L : floor_div24(target.offset24())});
    long matched = 0;
    for (long n = start; n <= bound; ++n) {
        if (expansion.coeff_q(n) != target.coeff_q(n)) {
            cert.status = CertStatus::Invalid;
            cert.first_mismatch = n;
            cert.matched_coefficients = matched;
            cert.verified_bound = n - 1;
            std::ostringstream msg;
            msg << "first divergent coefficient at q^" << n;
            cert.detail = msg.str();
            return cert;
        }
        ++matched;
    }
    cert.status = CertStatus::Valid;
    cert.verified_bound = bound;
    cert.matched_coefficients = matched;
    cert.detail = "expansions agree through the verification bound";
    return cert;
}

Level1Decomposition level1_polynomial_decomposition(const QSeries& target, long k) {
    if (k < 0 || k % 2 != 0) {
        throw out_of_domain_error("even non-negative weight required");
    }
    if (!target.is_zero() && (target.offset24() % 24 != 0 || target.offset24() < 0)) {
        throw out_of_domain_error("target must have integer non-negative q-powers");
    }
    std::vector<std::pair<long, long>> monomials;
    for (long alpha = 0; 4 * alpha <= k; ++alpha) {
        const long rem = k - 4 * alpha;
        if (rem % 6 == 0) {
            monomials.emplace_back(alpha, rem / 6);
        }
    }
    Level1Decomposition result;
    const long dim = static_cast<long>(monomials.size());
    if (dim == 0) {
        result.exact = target.is_zero();
        return result;
    }
    const long avail = target.known_to_24() / 24; // integer coefficients known
    if (avail < dim + 1) {
        throw insufficient_precision_error("need at least dim+1 coefficients");
    }

    const QSeries e4 = eisenstein_level1(4, avail);
    const QSeries e6 = eisenstein_level1(6, avail);
    std::vector<QSeries> cols;
    for (const auto& [alpha, beta] : monomials) {
        cols.push_back((e4.pow(alpha) * e6.pow(beta)).truncated(avail));
    }

    QMatrix a(static_cast<std::size_t>(dim + 1), QVector(monomials.size()));
    for (std::size_t col = 0; col < cols.size(); ++col) {
        for (long row = 0; row <= dim; ++row) {
            a[static_cast<std::size_t>(row)][col] = cols[col].coeff_q(row);
        }
    }
    const QVector rhs = integer_coeff_window(target, 0, dim);
    const SolveResult solved = solve_exact(a, rhs);
    if (solved.status != SolveResult::Status::Unique) {
        return result; // inexact
    }
    // Verify the fit on every remaining known coefficient.
    for (long n = dim + 1; n < avail; ++n) {
        mpq_class acc(0);
        for (std::size_t col = 0; col < cols.size(); ++col) {
            acc += solved.solution[col] * cols[col].coeff_q(n);
        }
        if (acc != target.coeff_q(n)) {
            return result;
        }
    }
    result.exact = true;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (solved.solution[i] != 0) {
            result.coefficients[monomials[i]] = solved.solution[i];
        }
    }
    return result;
}

WeightZeroExponents weight_zero_exponents(long k) {
    if (k < 0 || k % 2 != 0) {
        throw out_of_domain_error("even non-negative weight required");
    }
    for (long a = 0; a <= 2; ++a) {
        for (long b = 0; b <= 1; ++b) {
            if ((k + 4 * a + 6 * b) % 12 == 0) {
                return {a, b, (k + 4 * a + 6 * b) / 12};
            }
        }
    }
    throw out_of_domain_error("no exponent choice found"); // unreachable for even k
}

QSeries weight_zero_function(const QSeries& f, long k, long precision) {
    if (f.is_zero()) {
        throw zero_series_error("weight-zero construction of the zero series");
    }
    const WeightZeroExponents e = weight_zero_exponents(k);
    const QSeries e4 = eisenstein_level1(4, precision);
    const QSeries e6 = eisenstein_level1(6, precision);
    const QSeries delta = eta_series(precision).pow(24);
    QSeries g = f.truncated(precision);
    g = g * e4.pow(e.a);
    g = g * e6.pow(e.b);
    g = g * delta.pow(-e.c);
    return g.truncated(precision);
}

QSeries j_invariant_series(long m, long precision) {
    if (m < 1 || precision < 1) {
        throw out_of_domain_error("m and precision must be >= 1");
    }
    const QSeries e4 = eisenstein_level1(4, precision);
    const QSeries delta_inv = eta_series(precision).pow(24).inverse();
    const QSeries j = (e4.pow(3) * delta_inv).truncated(precision);
    return j.substituted(m).truncated(precision);
}

QSeries j_from_eta_route(long precision) {
    // E4 as the classical two-term level-4 eta sum, cubed, over eta^24.
    EtaSum e4_sum;
    e4_sum.terms.push_back({1, EtaQuotient(4, {{1, 16}, {2, -8}})});
    e4_sum.terms.push_back({256, EtaQuotient(4, {{2, 16}, {1, -8}})});
    const QSeries e4 = eta_sum_expand(e4_sum, precision + 1);
    const QSeries delta_inv = eta_quotient_expand(EtaQuotient(1, {{1, 24}}), precision + 1).inverse();
    return (e4.pow(3) * delta_inv).truncated(precision);
}

FeasibilityVerdict prime_level_feasibility(long p, long r, long k) {
    if (!is_prime(p)) {
        throw not_prime_error("prime level required");
    }
    if (r < 1 || k < 2 || k % 2 != 0) {
        throw out_of_domain_error("need r >= 1 and even k >= 2");
    }
    const long rhs = -2 * k;
    std::ostringstream inst;
    inst << "(p-1)b + (p^2-1)c + ... + (p^" << r << "-1)z = " << rhs
         << " with p = " << p << "; left side vanishes mod " << p - 1
         << ", right side is " << rhs << " = " << ((rhs % (p - 1)) + (p - 1)) % (p - 1)
         << " mod " << p - 1;
    if (k != 2) {
        inst << " (necessary condition only: the argument is stated for weight 2)";
    }
    if ((2 * k) % (p - 1) != 0) {
        return {Feasibility::InfeasibleCongruence, inst.str()};
    }
    if (p == 5 && ((2 * k) / 4) % 2 != 0) {
        std::ostringstream parity;
        parity << "after dividing by 4 the right side is " << (-2 * k) / 4
               << " (odd), while the trivial-character constraint forces the "
                  "left side to have only even entries; p = " << p;
        if (k != 2) {
            parity << " (necessary condition only)";
        }
        return {Feasibility::InfeasibleParity, parity.str()};
    }
    return {Feasibility::Feasible, inst.str()};
}

} // namespace etaq
