#include "etaq/linalg.hpp"

#include <cstddef>
#include <utility>

namespace etaq {

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

// Clears denominators row by row (row scaling does not change rank or the
// solution set of an augmented system).
ZMatrix clear_denominators(const QMatrix& m) {
    ZMatrix z(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        mpz_class l(1);
        for (const auto& x : m[i]) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        }
        z[i].reserve(m[i].size());
        for (const auto& x : m[i]) {
            z[i].push_back(mpz_class(x.get_num() * (l / x.get_den())));
        }
    }
    return z;
}

// Fraction-free Bareiss elimination, pivoting on the first nonzero entry of
// each column (deterministic).  Sweeps columns [0, sweep_cols); rows are
// updated across their full width.  Returns the pivot columns in order.
std::vector<long> bareiss(ZMatrix& m, long sweep_cols) {
    std::vector<long> pivots;
    if (m.empty()) {
        return pivots;
    }
    const long rows = static_cast<long>(m.size());
    const long cols = static_cast<long>(m[0].size());
    mpz_class prev(1), t;
    long pr = 0;
    for (long col = 0; col < sweep_cols && pr < rows; ++col) {
        long sel = -1;
        for (long i = pr; i < rows; ++i) {
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) {
            continue;
        }
        std::swap(m[static_cast<std::size_t>(pr)], m[static_cast<std::size_t>(sel)]);
        auto& prow = m[static_cast<std::size_t>(pr)];
        for (long i = pr + 1; i < rows; ++i) {
            auto& row = m[static_cast<std::size_t>(i)];
            const mpz_class head = row[static_cast<std::size_t>(col)];
            for (long j = col + 1; j < cols; ++j) {
                t = row[static_cast<std::size_t>(j)] * prow[static_cast<std::size_t>(col)]
                    - head * prow[static_cast<std::size_t>(j)];
                mpz_divexact(row[static_cast<std::size_t>(j)].get_mpz_t(),
                             t.get_mpz_t(), prev.get_mpz_t());
            }
            row[static_cast<std::size_t>(col)] = 0;
        }
        prev = prow[static_cast<std::size_t>(col)];
        pivots.push_back(col);
        ++pr;
    }
    return pivots;
}

} // namespace

long matrix_rank(QMatrix m) {
    if (m.empty() || m[0].empty()) {
        return 0;
    }
    ZMatrix z = clear_denominators(m);
    return static_cast<long>(bareiss(z, static_cast<long>(z[0].size())).size());
}

SolveResult solve_exact(const QMatrix& a, const QVector& b) {
    const long rows = static_cast<long>(a.size());
    const long n = rows > 0 ? static_cast<long>(a[0].size()) : 0;
    QMatrix aug(a);
    for (long i = 0; i < rows; ++i) {
        aug[static_cast<std::size_t>(i)].push_back(b[static_cast<std::size_t>(i)]);
    }
    ZMatrix z = rows > 0 ? clear_denominators(aug) : ZMatrix{};
    const std::vector<long> pivots = bareiss(z, n);
    const long rank = static_cast<long>(pivots.size());

    // Rows below the pivot block are zero across the coefficient columns;
    // a nonzero augmented entry there means the system is inconsistent.
    for (long i = rank; i < rows; ++i) {
        if (z[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] != 0) {
            return {SolveResult::Status::NoSolution, {}, 0};
        }
    }
    if (rank < n) {
        return {SolveResult::Status::Underdetermined, {}, n - rank};
    }

    // Unique solution: back substitution on the echelon form.
    QVector x(static_cast<std::size_t>(n));
    for (long i = n - 1; i >= 0; --i) {
        const auto& row = z[static_cast<std::size_t>(i)];
        mpq_class acc(row[static_cast<std::size_t>(n)]);
        for (long j = i + 1; j < n; ++j) {
            acc -= mpq_class(row[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
        }
        acc /= mpq_class(row[static_cast<std::size_t>(i)]);
        acc.canonicalize();
        x[static_cast<std::size_t>(i)] = acc;
    }
    return {SolveResult::Status::Unique, std::move(x), 0};
}

} // namespace etaq
