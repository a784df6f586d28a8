#include "etaq/basis_search.hpp"
#include "etaq/errors.hpp"
#include "etaq/linalg.hpp"
#include "etaq/spaces.hpp"

#include <numeric>
#include <utility>

namespace etaq {

namespace {

bool character_matches(const EtaQuotient& f, long requested_discriminant) {
    const CharacterDescriptor desc = eq_character(f);
    // Kronecker evaluations are compared on small d coprime to 24N instead of
    // comparing discriminants symbolically.
    for (long d = 1; d <= 100; ++d) {
        if (std::gcd(d, 24 * f.level) != 1) {
            continue;
        }
        if (desc.chi(d) != kronecker_symbol(mpz_class(requested_discriminant), mpz_class(d))) {
            return false;
        }
    }
    return true;
}

} // namespace

EnumerationResult enumerate_eta_quotients(long N, long k, const SearchBounds& bounds,
                                          long character_discriminant) {
    if (N < 1 || k < 1 || bounds.r_max < 1 || bounds.max_results < 1) {
        throw out_of_domain_error("invalid enumeration parameters");
    }
    const std::vector<long> divs = divisors(N);
    const long m = static_cast<long>(divs.size());
    const long target_sum = 2 * k;

    EnumerationResult result;
    std::vector<long> r(static_cast<std::size_t>(m), 0);

    // DFS over divisor-indexed exponents; the last exponent is forced by the
    // weight constraint, the congruences and cusp conditions are leaf checks.
    auto leaf = [&](void) {
        long sum_delta = 0, sum_codelta = 0;
        for (long i = 0; i < m; ++i) {
            sum_delta += divs[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(i)];
            sum_codelta += (N / divs[static_cast<std::size_t>(i)]) * r[static_cast<std::size_t>(i)];
        }
        if (sum_delta % 24 != 0 || sum_codelta % 24 != 0) {
            return;
        }
        std::map<long, long> exps;
        for (long i = 0; i < m; ++i) {
            if (r[static_cast<std::size_t>(i)] != 0) {
                exps[divs[static_cast<std::size_t>(i)]] = r[static_cast<std::size_t>(i)];
            }
        }
        EtaQuotient f(N, std::move(exps));
        if (!character_matches(f, character_discriminant)) {
            return;
        }
        for (long d : divs) {
            if (cusp_order(f, d) < 0) {
                return;
            }
        }
        result.quotients.push_back(std::move(f));
    };

    auto dfs = [&](auto&& self, long i, long partial) -> void {
        if (static_cast<long>(result.quotients.size()) >= bounds.max_results) {
            result.complete = false;
            return;
        }
        const long remaining = m - i;
        if (i == m - 1) {
            const long last = target_sum - partial;
            if (last >= -bounds.r_max && last <= bounds.r_max) {
                r[static_cast<std::size_t>(i)] = last;
                leaf();
                r[static_cast<std::size_t>(i)] = 0;
            }
            return;
        }
        // Prune when the remaining exponents cannot reach the weight target.
        const long deficit = target_sum - partial;
        if (deficit > remaining * bounds.r_max || deficit < -remaining * bounds.r_max) {
            return;
        }
        for (long v = -bounds.r_max; v <= bounds.r_max; ++v) {
            r[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, partial + v);
        }
        r[static_cast<std::size_t>(i)] = 0;
    };

    dfs(dfs, 0, 0);
    if (static_cast<long>(result.quotients.size()) >= bounds.max_results) {
        result.complete = false;
        result.quotients.resize(static_cast<std::size_t>(bounds.max_results));
    }
    return result;
}

std::vector<EtaQuotient> prune_to_rank_basis(const std::vector<EtaQuotient>& candidates,
                                             long precision) {
    if (candidates.empty()) {
        return {};
    }
    const long level = candidates.front().level;
    const mpq_class weight = eq_weight(candidates.front());
    for (const auto& f : candidates) {
        if (f.level != level || eq_weight(f) != weight) {
            throw out_of_domain_error("candidates must share level and weight");
        }
    }
    if (weight.get_den() != 1) {
        throw half_integral_weight_error("rank pruning requires integral weight");
    }
    const long bound = sturm_bound(level, weight.get_num().get_si());
    if (precision < bound + 1) {
        throw insufficient_precision_error("precision below the Sturm bound");
    }

    std::vector<EtaQuotient> basis;
    QMatrix rows;
    for (const auto& f : candidates) {
        const QSeries s = eta_quotient_expand(f, precision);
        QVector row(static_cast<std::size_t>(precision));
        for (long n = 0; n < precision; ++n) {
            row[static_cast<std::size_t>(n)] = s.coeff_q(n);
        }
        rows.push_back(std::move(row));
        if (matrix_rank(rows) == static_cast<long>(rows.size())) {
            basis.push_back(f);
        } else {
            rows.pop_back();
        }
    }
    return basis;
}

} // namespace etaq
