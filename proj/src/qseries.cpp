#include "etaq/qseries.hpp"
#include "etaq/errors.hpp"

#include <algorithm>
#include <utility>

namespace etaq {

QSeries::QSeries(long offset24, std::vector<mpq_class> coeffs)
    : offset24_(offset24), coeffs_(std::move(coeffs)) {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) {
        ++lead;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        offset24_ += 24 * static_cast<long>(lead);
    }
}

QSeries QSeries::zero(long known_to_24) {
    QSeries s;
    s.offset24_ = known_to_24;
    return s;
}

QSeries QSeries::one(long precision) {
    return monomial(1, 0, precision);
}

QSeries QSeries::monomial(const mpq_class& c, long offset24, long precision) {
    if (c == 0) {
        return zero(offset24 + 24 * precision);
    }
    std::vector<mpq_class> coeffs(static_cast<std::size_t>(std::max(precision, 1L)), mpq_class(0));
    coeffs[0] = c;
    return QSeries(offset24, std::move(coeffs));
}

mpq_class QSeries::coeff_q24(long e24) const {
    if (e24 >= known_to_24()) {
        throw insufficient_precision_error("coefficient beyond known precision");
    }
    if (e24 < offset24_) {
        return 0;
    }
    long rel = e24 - offset24_;
    if (rel % 24 != 0) {
        return 0; // off-grid exponents inside the known range are exactly zero
    }
    return coeffs_[static_cast<std::size_t>(rel / 24)];
}

QSeries QSeries::truncated(long precision) const {
    if (precision < 0) {
        precision = 0;
    }
    if (precision >= this->precision()) {
        return *this;
    }
    std::vector<mpq_class> c(coeffs_.begin(), coeffs_.begin() + precision);
    if (std::all_of(c.begin(), c.end(), [](const mpq_class& x) { return x == 0; })) {
        return zero(offset24_ + 24 * precision);
    }
    return QSeries(offset24_, std::move(c));
}

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

QSeries QSeries::operator+(const QSeries& other) const {
    const long bound = std::min(known_to_24(), other.known_to_24());
    if (is_zero() || other.is_zero()) {
        const QSeries& s = is_zero() ? other : *this;
        if (bound <= s.offset24_) {
            return zero(bound);
        }
        return s.truncated((bound - s.offset24_) / 24);
    }
    if ((offset24_ - other.offset24_) % 24 != 0) {
        throw incompatible_offsets_error("summand offsets differ mod 24");
    }
    const long off = std::min(offset24_, other.offset24_);
    const long n = (bound - off) / 24;
    std::vector<mpq_class> c(static_cast<std::size_t>(std::max(n, 0L)), mpq_class(0));
    auto accumulate = [&](const QSeries& s) {
        const long shift = (s.offset24_ - off) / 24;
        for (long i = 0; i + shift < n && i < s.precision(); ++i) {
            c[static_cast<std::size_t>(i + shift)] += s.coeffs_[static_cast<std::size_t>(i)];
        }
    };
    accumulate(*this);
    accumulate(other);
    if (std::all_of(c.begin(), c.end(), [](const mpq_class& x) { return x == 0; })) {
        return zero(bound);
    }
    return QSeries(off, std::move(c));
}

QSeries QSeries::operator-(const QSeries& other) const {
    return *this + (-other);
}

QSeries QSeries::operator*(const QSeries& other) const {
    if (is_zero()) {
        return zero(offset24_ + other.offset24_);
    }
    if (other.is_zero()) {
        return zero(offset24_ + other.offset24_);
    }
    const long n = std::min(precision(), other.precision());
    std::vector<mpq_class> c(static_cast<std::size_t>(n), mpq_class(0));
    mpq_class t;
    for (long i = 0; i < std::min(precision(), n); ++i) {
        if (coeffs_[static_cast<std::size_t>(i)] == 0) {
            continue;
        }
        for (long j = 0; i + j < n && j < other.precision(); ++j) {
            t = coeffs_[static_cast<std::size_t>(i)] * other.coeffs_[static_cast<std::size_t>(j)];
            c[static_cast<std::size_t>(i + j)] += t;
        }
    }
    return QSeries(offset24_ + other.offset24_, std::move(c));
}

QSeries QSeries::operator*(const mpq_class& scalar) const {
    if (scalar == 0) {
        return zero(known_to_24());
    }
    QSeries r = *this;
    for (auto& c : r.coeffs_) {
        c *= scalar;
    }
    return r;
}

QSeries QSeries::inverse() const {
    if (is_zero()) {
        throw zero_series_error("inversion of the zero series");
    }
    const long n = precision();
    std::vector<mpq_class> b(static_cast<std::size_t>(n), mpq_class(0));
    const mpq_class lead_inv = mpq_class(1) / coeffs_[0];
    b[0] = lead_inv;
    for (long m = 1; m < n; ++m) {
        mpq_class acc(0);
        for (long k = 1; k <= m; ++k) {
            acc += coeffs_[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(m - k)];
        }
        b[static_cast<std::size_t>(m)] = -acc * lead_inv;
    }
    return QSeries(-offset24_, std::move(b));
}

QSeries QSeries::pow(long e) const {
    if (e == 0) {
        return one(std::max(precision(), 1L));
    }
    QSeries base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    QSeries acc = one(base.precision());
    while (n > 0) {
        if (n & 1UL) {
            acc = acc * base;
        }
        n >>= 1UL;
        if (n > 0) {
            base = base * base;
        }
    }
    return acc;
}

QSeries QSeries::substituted(long m) const {
    if (m < 1) {
        throw out_of_domain_error("substitution exponent must be >= 1");
    }
    if (m == 1) {
        return *this;
    }
    if (is_zero()) {
        return zero(m * offset24_);
    }
    std::vector<mpq_class> c(static_cast<std::size_t>(m * precision()), mpq_class(0));
    for (long i = 0; i < precision(); ++i) {
        c[static_cast<std::size_t>(m * i)] = coeffs_[static_cast<std::size_t>(i)];
    }
    return QSeries(m * offset24_, std::move(c));
}

bool QSeries::agree_to(const QSeries& a, const QSeries& b, long bound) {
    const long limit = 24 * bound;
    if (a.known_to_24() <= limit || b.known_to_24() <= limit) {
        throw insufficient_precision_error("series truncated before the comparison bound");
    }
    const long start = std::min(a.offset24_, b.offset24_);
    if (start > limit) {
        return true; // both vanish through the bound
    }
    // Exponents present in either series are offset + 24j; walk both grids.
    auto scan = [&](const QSeries& s, const QSeries& t) {
        for (long e = s.offset24_; e <= limit; e += 24) {
            if (s.coeff_q24(e) != t.coeff_q24(e)) {
                return false;
            }
        }
        return true;
    };
    if (!a.is_zero() && !scan(a, b)) {
        return false;
    }
    if (!b.is_zero() && !scan(b, a)) {
        return false;
    }
    return true;
}

} // namespace etaq
