#include "etaq/etacore.hpp"
#include "etaq/errors.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace etaq {

std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_prime(long n) {
    if (n < 2) {
        return false;
    }
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

int kronecker_symbol(const mpz_class& a, const mpz_class& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int kronecker_symbol(long a, long n) {
    return kronecker_symbol(mpz_class(a), mpz_class(n));
}

EtaQuotient::EtaQuotient(long level, std::map<long, long> exps)
    : level(level), exponents(std::move(exps)) {
    if (level < 1) {
        throw out_of_domain_error("level must be positive");
    }
    for (auto it = exponents.begin(); it != exponents.end();) {
        if (it->first < 1 || level % it->first != 0) {
            throw not_a_divisor_error("exponent key does not divide the level");
        }
        it = it->second == 0 ? exponents.erase(it) : std::next(it);
    }
}

long EtaQuotient::exponent(long delta) const {
    auto it = exponents.find(delta);
    return it == exponents.end() ? 0 : it->second;
}

long EtaQuotient::weighted_exponent_sum() const {
    long s = 0;
    for (const auto& [delta, r] : exponents) {
        s += delta * r;
    }
    return s;
}

bool EtaQuotient::operator<(const EtaQuotient& other) const {
    if (level != other.level) {
        return level < other.level;
    }
    return exponents < other.exponents;
}

EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b) {
    if (a.level != b.level) {
        throw out_of_domain_error("quotient product requires a common level");
    }
    std::map<long, long> exps = a.exponents;
    for (const auto& [delta, r] : b.exponents) {
        exps[delta] += r;
    }
    return EtaQuotient(a.level, std::move(exps));
}

QSeries eta_series(long precision) {
    if (precision < 1) {
        throw out_of_domain_error("precision must be >= 1");
    }
    std::vector<mpq_class> c(static_cast<std::size_t>(precision), mpq_class(0));
    // Generalized pentagonal exponents k(3k-1)/2 for k = 0, 1, -1, 2, -2, ...
    for (long k = 0;; ++k) {
        const long e1 = k * (3 * k - 1) / 2;
        const long e2 = k * (3 * k + 1) / 2;
        if (e1 >= precision && e2 >= precision) {
            break;
        }
        const int sign = (k % 2 == 0) ? 1 : -1;
        if (e1 < precision) {
            c[static_cast<std::size_t>(e1)] = sign;
        }
        if (k > 0 && e2 < precision) {
            c[static_cast<std::size_t>(e2)] = sign;
        }
    }
    return QSeries(1, std::move(c));
}

QSeries eta_quotient_expand(const EtaQuotient& f, long precision) {
    if (precision < 1) {
        throw out_of_domain_error("precision must be >= 1");
    }
    if (f.exponents.empty()) {
        return QSeries::one(precision);
    }
    const QSeries eta = eta_series(precision);
    QSeries result = QSeries::one(precision);
    for (const auto& [delta, r] : f.exponents) {
        // Every intermediate is truncated back to `precision` coefficients;
        // truncation below the minimum-precision rule is sound.
        QSeries factor = eta.substituted(delta).truncated(precision).pow(r);
        result = (result * factor).truncated(precision);
    }
    return result;
}

mpq_class eq_weight(const EtaQuotient& f) {
    long s = 0;
    for (const auto& [delta, r] : f.exponents) {
        s += r;
    }
    mpq_class w(s, 2);
    w.canonicalize();
    return w;
}

LigozatReport ligozat_check(const EtaQuotient& f) {
    long sum_delta = 0, sum_codelta = 0, sum_r = 0;
    for (const auto& [delta, r] : f.exponents) {
        sum_delta += delta * r;
        sum_codelta += (f.level / delta) * r;
        sum_r += r;
    }
    LigozatReport rep;
    rep.cond_delta = sum_delta % 24 == 0;
    rep.cond_level_over_delta = sum_codelta % 24 == 0;
    rep.integral_weight = sum_r % 2 == 0;
    return rep;
}

CharacterDescriptor eq_character(const EtaQuotient& f) {
    const mpq_class k = eq_weight(f);
    if (k.get_den() != 1) {
        throw half_integral_weight_error("character is defined only at integral weight");
    }
    CharacterDescriptor desc;
    desc.weight = k;
    desc.s_value = 1;
    // Track the prime factorization of s directly from the divisors, so the
    // squarefree kernel never requires factoring a large value.
    std::map<long, long> prime_exp;
    for (const auto& [delta, r] : f.exponents) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(delta),
                      static_cast<unsigned long>(r < 0 ? -r : r));
        if (r >= 0) {
            desc.s_value *= p;
        } else {
            desc.s_value /= p;
        }
        long d = delta;
        for (long q = 2; q * q <= d; ++q) {
            while (d % q == 0) {
                prime_exp[q] += r;
                d /= q;
            }
        }
        if (d > 1) {
            prime_exp[d] += r;
        }
    }
    mpz_class kernel(1);
    for (const auto& [p, e] : prime_exp) {
        if (e % 2 != 0) {
            kernel *= p;
        }
    }
    const bool odd_weight = mpz_odd_p(k.get_num().get_mpz_t()) != 0;
    mpz_class disc = odd_weight ? -kernel : kernel;
    // Fundamental discriminant of the quadratic character (disc / .).
    if (mpz_class(((disc % 4) + 4) % 4) != 1) {
        disc *= 4;
    }
    desc.discriminant = disc;
    desc.certified = ligozat_check(f).all();
    return desc;
}

mpq_class cusp_order(const EtaQuotient& f, long d) {
    if (d < 1 || f.level % d != 0) {
        throw not_a_divisor_error("cusp denominator must divide the level");
    }
    // ord(d) = N / (24 d gcd(d, N/d)) * sum over delta of gcd(d,delta)^2 r/delta.
    // The prefactor is positive, and at d = N the value reduces to the leading
    // exponent sum(delta r)/24, which is the normalization consumed downstream.
    mpq_class acc(0);
    for (const auto& [delta, r] : f.exponents) {
        const long g = std::gcd(d, delta);
        mpq_class term(g * g * r, delta);
        term.canonicalize();
        acc += term;
    }
    mpq_class pre(f.level, 24 * d * std::gcd(d, f.level / d));
    pre.canonicalize();
    return pre * acc;
}

bool is_holomorphic_form(const EtaQuotient& f) {
    if (!ligozat_check(f).all()) {
        return false;
    }
    if (eq_weight(f) < 0) {
        return false;
    }
    for (long d : divisors(f.level)) {
        if (cusp_order(f, d) < 0) {
            return false;
        }
    }
    return true;
}

std::vector<mpz_class> partition_numbers(long n_max) {
    std::vector<mpz_class> p(static_cast<std::size_t>(n_max) + 1);
    p[0] = 1;
    for (long n = 1; n <= n_max; ++n) {
        mpz_class acc(0);
        for (long k = 1;; ++k) {
            const long g1 = k * (3 * k - 1) / 2;
            const long g2 = k * (3 * k + 1) / 2;
            if (g1 > n) {
                break;
            }
            const int sign = (k % 2 == 1) ? 1 : -1;
            if (sign > 0) {
                acc += p[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) {
                    acc += p[static_cast<std::size_t>(n - g2)];
                }
            } else {
                acc -= p[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) {
                    acc -= p[static_cast<std::size_t>(n - g2)];
                }
            }
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

} // namespace etaq
