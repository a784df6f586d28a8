#ifndef ETAQ_SPACES_HPP
#define ETAQ_SPACES_HPP

#include "etaq/qseries.hpp"

namespace etaq {

/// Names a target space M_k(Gamma0(N), chi); the character is the Kronecker
/// symbol of `character_discriminant` (1 for the trivial character).
struct SpaceSpec {
    long level = 1;
    long weight = 2;
    long character_discriminant = 1;

    bool operator==(const SpaceSpec&) const = default;
};

/// Index of Gamma0(N) in SL2(Z): N * prod over p | N of (1 + 1/p).
long index_gamma0(long N);

/// Genus of X0(p) for prime p. Throws not_prime_error.
long genus_X0p(long p);

/// dim S_k(Gamma0(p)) for prime p and even k.  k = 2 returns the genus;
/// k >= 4 requires p >= 5.  Throws out_of_domain_error / not_prime_error.
long dim_cusp_gamma0p(long p, long k);

/// Dimension of the weight-k Eisenstein subspace at prime level:
/// 1 for k = 2, 2 for even k >= 4.
long dim_eisenstein_gamma0p(long p, long k);

/// floor(k * [SL2(Z):Gamma0(N)] / 12); two forms of weight k on Gamma0(N)
/// agreeing through this coefficient index are equal.
long sturm_bound(long N, long k);

/// Level-1 Eisenstein series normalized to constant term 1:
/// E2 = 1 - 24 sum sigma_1(n) q^n, E4 = 1 + 240 sum sigma_3, E6 = 1 - 504 sum sigma_5.
/// Only k in {2, 4, 6} is supported.
QSeries eisenstein_level1(long k, long precision);

/// (p E2(q^p) - E2(q)) / (p - 1): the weight-2 Eisenstein series on
/// Gamma0(p) with constant term 1.
QSeries eisenstein_weight2_level_p(long p, long precision);

} // namespace etaq

#endif
