#ifndef ETAQ_ETACORE_HPP
#define ETAQ_ETACORE_HPP

#include "etaq/qseries.hpp"

#include <gmpxx.h>
#include <map>
#include <vector>

namespace etaq {

/// All positive divisors of n, ascending.
std::vector<long> divisors(long n);

bool is_prime(long n);

/// Kronecker symbol (a/n), fully extended to even and negative arguments.
int kronecker_symbol(const mpz_class& a, const mpz_class& n);
int kronecker_symbol(long a, long n);

/// A formal product over the divisors delta of `level` of the Dedekind eta
/// series evaluated at q^delta, each raised to an integer exponent.
/// Divisors with zero exponent are dropped; the empty map is the constant 1.
struct EtaQuotient {
    long level = 1;
    std::map<long, long> exponents;

    EtaQuotient() = default;
    /// Validates that every exponent key divides the level
    /// (throws not_a_divisor_error) and strips zero exponents.
    EtaQuotient(long level, std::map<long, long> exponents);

    long exponent(long delta) const;
    /// Sum of delta * r_delta (the leading exponent in 1/24 units).
    long weighted_exponent_sum() const;

    bool operator==(const EtaQuotient&) const = default;
    bool operator<(const EtaQuotient&) const;
};

/// Pointwise product of two quotients on a common level.
EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b);

/// Weight and character data attached to an eta quotient of integral weight.
struct CharacterDescriptor {
    mpq_class weight;
    mpq_class s_value;       // product of delta^{r_delta}
    mpz_class discriminant;  // fundamental discriminant of the Kronecker character
    bool certified = false;  // true only when the modularity congruences hold

    /// chi(d) for d coprime to twice the support of s_value.
    int chi(long d) const { return kronecker_symbol(discriminant, mpz_class(d)); }
};

struct LigozatReport {
    bool cond_delta = false;          // sum of delta * r_delta == 0 mod 24
    bool cond_level_over_delta = false; // sum of (N/delta) * r_delta == 0 mod 24
    bool integral_weight = false;     // sum of r_delta is even

    bool all() const { return cond_delta && cond_level_over_delta && integral_weight; }
};

/// q^{1/24} * prod (1 - q^n), expanded by the pentagonal number theorem.
/// offset24 = 1; every coefficient is -1, 0 or 1.
QSeries eta_series(long precision);

/// Expansion of an eta quotient to `precision` coefficients beyond its
/// leading exponent (which is weighted_exponent_sum() in 1/24 units).
QSeries eta_quotient_expand(const EtaQuotient& f, long precision);

/// Half the sum of the exponents.
mpq_class eq_weight(const EtaQuotient& f);

LigozatReport ligozat_check(const EtaQuotient& f);

/// Weight, s-value and Kronecker discriminant of the quotient's character.
/// Throws half_integral_weight_error when the weight is not an integer.
/// The descriptor is certified only when ligozat_check passes.
CharacterDescriptor eq_character(const EtaQuotient& f);

/// Order of vanishing at the cusps of denominator d (d | level), normalized
/// so the order at the cusp infinity (d = level) is the leading q-exponent.
mpq_class cusp_order(const EtaQuotient& f, long d);

/// True iff the quotient satisfies the modularity congruences, has
/// non-negative integral weight, and vanishes to order >= 0 at every cusp.
bool is_holomorphic_form(const EtaQuotient& f);

/// p(0) ... p(n_max) via the pentagonal-number recurrence, exact integers.
std::vector<mpz_class> partition_numbers(long n_max);

} // namespace etaq

#endif
