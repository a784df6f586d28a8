#include "etaq/linalg.hpp"

#include <doctest.h>

using etaq::QMatrix;
using etaq::QVector;
using etaq::SolveResult;

TEST_CASE("rank") {
    CHECK(etaq::matrix_rank({}) == 0);
    CHECK(etaq::matrix_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(etaq::matrix_rank({{1, 2}, {3, 4}}) == 2);
    CHECK(etaq::matrix_rank({{mpq_class(1, 2), mpq_class(1, 3)},
                             {mpq_class(3, 2), mpq_class(1, 1)}}) == 1);
    CHECK(etaq::matrix_rank({{0, 0, 0}, {0, 0, 0}}) == 0);
    CHECK(etaq::matrix_rank({{0, 1, 0}, {0, 0, 2}, {0, 3, 7}}) == 2);
}

TEST_CASE("unique solve with exact rationals") {
    const QMatrix a{{1, 1}, {1, -1}, {2, 0}};
    const QVector b{mpq_class(1), mpq_class(0), mpq_class(1)};
    const auto r = etaq::solve_exact(a, b);
    REQUIRE(r.status == SolveResult::Status::Unique);
    CHECK(r.solution[0] == mpq_class(1, 2));
    CHECK(r.solution[1] == mpq_class(1, 2));
}

TEST_CASE("inconsistent system") {
    const QMatrix a{{1, 0}, {1, 0}, {0, 1}};
    const QVector b{1, 2, 0};
    CHECK(etaq::solve_exact(a, b).status == SolveResult::Status::NoSolution);
}

TEST_CASE("underdetermined system reports kernel dimension") {
    const QMatrix a{{1, 2, 3}, {2, 4, 6}};
    const QVector b{1, 2};
    const auto r = etaq::solve_exact(a, b);
    REQUIRE(r.status == SolveResult::Status::Underdetermined);
    CHECK(r.kernel_dim == 2);
}

TEST_CASE("solve verifies on a 4x4 rational system") {
    QMatrix a(4, QVector(4));
    QVector b(4);
    // Hilbert-like matrix, known to be invertible.
    for (long i = 0; i < 4; ++i) {
        for (long j = 0; j < 4; ++j) {
            a[i][j] = mpq_class(1, i + j + 1);
        }
        b[i] = mpq_class(i + 1, 7);
    }
    const auto r = etaq::solve_exact(a, b);
    REQUIRE(r.status == SolveResult::Status::Unique);
    for (long i = 0; i < 4; ++i) {
        mpq_class acc(0);
        for (long j = 0; j < 4; ++j) {
            acc += a[i][j] * r.solution[j];
        }
        CHECK(acc == b[i]);
    }
}
