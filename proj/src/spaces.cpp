#include "etaq/spaces.hpp"
#include "etaq/errors.hpp"
#include "etaq/etacore.hpp"

#include <vector>

namespace etaq {

long index_gamma0(long N) {
    if (N < 1) {
        throw out_of_domain_error("level must be positive");
    }
    long idx = N;
    long n = N;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            idx = idx / p * (p + 1);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        idx = idx / n * (n + 1);
    }
    return idx;
}

long genus_X0p(long p) {
    if (!is_prime(p)) {
        throw not_prime_error("genus formula requires a prime level");
    }
    long g = (p + 1) / 12;
    if (p % 12 == 1) {
        --g;
    }
    return g;
}

long dim_cusp_gamma0p(long p, long k) {
    if (!is_prime(p)) {
        throw not_prime_error("dimension formula requires a prime level");
    }
    if (k < 2 || k % 2 != 0) {
        throw out_of_domain_error("dimension formula requires even weight >= 2");
    }
    const long g = genus_X0p(p);
    if (k == 2) {
        return g;
    }
    if (p < 5) {
        throw out_of_domain_error("weight >= 4 formula requires p >= 5");
    }
    const long e2 = 1 + kronecker_symbol(-1, p);
    const long e3 = 1 + kronecker_symbol(-3, p);
    return (k - 1) * (g - 1) + (k / 4) * e2 + (k / 3) * e3 + k - 2;
}

long dim_eisenstein_gamma0p(long p, long k) {
    if (!is_prime(p)) {
        throw not_prime_error("dimension formula requires a prime level");
    }
    if (k < 2 || k % 2 != 0) {
        throw out_of_domain_error("even weight >= 2 required");
    }
    return k == 2 ? 1 : 2;
}

long sturm_bound(long N, long k) {
    return k * index_gamma0(N) / 12;
}

namespace {

// sigma_m(n) as an exact integer.
mpz_class sigma(long n, long m) {
    mpz_class s(0), t;
    for (long d : divisors(n)) {
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(m));
        s += t;
    }
    return s;
}

} // namespace

QSeries eisenstein_level1(long k, long precision) {
    if (k != 2 && k != 4 && k != 6) {
        throw out_of_domain_error("only E2, E4, E6 are provided");
    }
    if (precision < 1) {
        throw out_of_domain_error("precision must be >= 1");
    }
    const long mult = k == 2 ? -24 : (k == 4 ? 240 : -504);
    std::vector<mpq_class> c(static_cast<std::size_t>(precision));
    c[0] = 1;
    for (long n = 1; n < precision; ++n) {
        mpz_class v = sigma(n, k - 1);
        v *= mult;
        c[static_cast<std::size_t>(n)] = mpq_class(v);
    }
    return QSeries(0, std::move(c));
}

QSeries eisenstein_weight2_level_p(long p, long precision) {
    if (!is_prime(p)) {
        throw not_prime_error("prime level required");
    }
    const QSeries e2 = eisenstein_level1(2, precision);
    QSeries num = e2.substituted(p) * mpq_class(p) - e2;
    mpq_class scale(1, p - 1);
    scale.canonicalize();
    return (num * scale).truncated(precision);
}

} // namespace etaq
