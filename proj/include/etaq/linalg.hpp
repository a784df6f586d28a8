#ifndef ETAQ_LINALG_HPP
#define ETAQ_LINALG_HPP

#include <gmpxx.h>
#include <vector>

namespace etaq {

using QVector = std::vector<mpq_class>;
using QMatrix = std::vector<QVector>; // row major

/// Exact rank via fraction-free (Bareiss) elimination after clearing
/// denominators row by row.
long matrix_rank(QMatrix m);

struct SolveResult {
    enum class Status { Unique, NoSolution, Underdetermined } status;
    QVector solution;  // populated only for Unique
    long kernel_dim = 0; // populated for Underdetermined
};

/// Solves A x = b exactly.  A is m x n (m >= n is typical: one row per
/// q-coefficient, one column per basis element).
SolveResult solve_exact(const QMatrix& a, const QVector& b);

} // namespace etaq

#endif
