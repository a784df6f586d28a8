#ifndef ETAQ_QSERIES_HPP
#define ETAQ_QSERIES_HPP

#include <gmpxx.h>
#include <vector>

namespace etaq {

/// Truncated q-expansion with exact rational coefficients.
///
/// A series represents q^{offset24/24} * (c_0 + c_1 q + c_2 q^2 + ...),
/// so the coefficient grid sits on integer powers of q above a leading
/// exponent measured in units of 1/24.  A nonzero series is normalized
/// (c_0 != 0).  The zero series is stored with an empty coefficient
/// vector; its offset24 records how far it is known to vanish.
///
/// Knowledge bound: coefficients of q^{e/24} are determined for all
/// e < offset24 + 24*precision (exponents below the offset are exactly
/// zero).  Every operation propagates the minimum of its operands'
/// bounds and never fabricates coefficients.
///
/// Instances are immutable; all operations return new values.
class QSeries {
public:
    QSeries() : offset24_(0) {}

    /// Normalizing constructor: strips leading zero coefficients.
    QSeries(long offset24, std::vector<mpq_class> coeffs);

    /// The zero series, known to vanish for exponents < known_to_24 (1/24 units).
    static QSeries zero(long known_to_24);
    /// The constant series 1 with the given number of known coefficients.
    static QSeries one(long precision);
    /// A single term c * q^{offset24/24} with the given precision.
    static QSeries monomial(const mpq_class& c, long offset24, long precision);

    bool is_zero() const { return coeffs_.empty(); }
    long offset24() const { return offset24_; }
    long precision() const { return static_cast<long>(coeffs_.size()); }
    /// Exclusive knowledge bound in 1/24 exponent units.
    long known_to_24() const { return offset24_ + 24 * precision(); }

    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    /// Coefficient of q^{e24/24}.  Throws insufficient_precision_error when
    /// e24 is at or beyond the knowledge bound.
    mpq_class coeff_q24(long e24) const;
    /// Coefficient of q^n (integer powers).
    mpq_class coeff_q(long n) const { return coeff_q24(24 * n); }

    /// Same series with at most `precision` coefficients retained.
    QSeries truncated(long precision) const;

    QSeries operator-() const;
    QSeries operator+(const QSeries& other) const;
    QSeries operator-(const QSeries& other) const;
    QSeries operator*(const QSeries& other) const;
    QSeries operator*(const mpq_class& scalar) const;

    /// Multiplicative inverse; throws zero_series_error on the zero series.
    QSeries inverse() const;
    /// Integer power, negative exponents via inverse().
    QSeries pow(long e) const;
    /// Substitution q -> q^m (m >= 1); precision grows m-fold.
    QSeries substituted(long m) const;

    bool operator==(const QSeries& other) const = default;

    /// True iff the coefficients of q^n agree exactly for all n <= bound,
    /// fractional exponents included.  Throws insufficient_precision_error
    /// when either series is truncated before q^bound.
    static bool agree_to(const QSeries& a, const QSeries& b, long bound);

private:
    long offset24_;
    std::vector<mpq_class> coeffs_;
};

inline QSeries operator*(const mpq_class& scalar, const QSeries& s) { return s * scalar; }

} // namespace etaq

#endif
