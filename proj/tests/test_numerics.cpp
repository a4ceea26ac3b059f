#include "lagc/lagrangian.hpp"
#include "lagc/numerics.hpp"

#include <doctest.h>

#include <cmath>

using namespace lagc;

namespace {

// Independent range oracle: classical Gram-Schmidt with re-orthogonalization.
Matrix gram_schmidt(const Matrix& M) {
    Matrix Q(M.rows(), M.cols());
    Eigen::Index k = 0;
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
        Vector v = M.col(j);
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index i = 0; i < k; ++i)
                v -= Q.col(i).dot(v) * Q.col(i);
        if (v.norm() > 1e-10) {
            Q.col(k++) = v / v.norm();
        }
    }
    return Q.leftCols(k);
}

} // namespace

TEST_CASE("symmetric_eigen on the identity") {
    auto r = symmetric_eigen(Matrix::Identity(2, 2));
    CHECK(r.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(r.eigenvalues(1) == doctest::Approx(1.0));
    CHECK((r.eigenvectors * r.eigenvectors.transpose() - Matrix::Identity(2, 2)).norm() <
          1e-12);
}

TEST_CASE("symmetric_eigen on a diagonal matrix") {
    Matrix S = Vector{{3.0, -1.0}}.asDiagonal();
    auto r = symmetric_eigen(S);
    CHECK(r.eigenvalues(0) == doctest::Approx(3.0));
    CHECK(r.eigenvalues(1) == doctest::Approx(-1.0));
    CHECK((r.eigenvectors.cwiseAbs() - Matrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("symmetric_eigen on the 2x2 exchange matrix") {
    // characteristic polynomial: lambda^2 - 1 = 0
    Matrix S(2, 2);
    S << 0, 1, 1, 0;
    auto r = symmetric_eigen(S);
    CHECK(r.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(r.eigenvalues(1) == doctest::Approx(-1.0));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(std::abs(r.eigenvectors(0, 0)) - inv_sqrt2) < 1e-12);
    CHECK(std::abs(std::abs(r.eigenvectors(1, 0)) - inv_sqrt2) < 1e-12);
    CHECK(r.eigenvectors(0, 0) * r.eigenvectors(1, 0) > 0); // (1,1) direction
    CHECK(r.eigenvectors(0, 1) * r.eigenvectors(1, 1) < 0); // (1,-1) direction
}

TEST_CASE("symmetric_eigen rejects bad input") {
    CHECK_THROWS_AS(symmetric_eigen(Matrix::Zero(2, 3)), ContractError);
    Matrix S(2, 2);
    S << 0, 1, 0, 0;
    CHECK_THROWS_AS(symmetric_eigen(S), ContractError);
}

TEST_CASE("symmetric_eigen reconstruction on random matrices") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(seed * 7 % 49);
        Matrix S = random_symmetric(n, seed);
        auto r = symmetric_eigen(S);
        CHECK((r.eigenvectors * r.eigenvalues.asDiagonal() * r.eigenvectors.transpose() - S)
                  .norm() <= 1e-10 * S.norm());
        CHECK((r.eigenvectors.transpose() * r.eigenvectors - Matrix::Identity(n, n)).norm() <=
              1e-10);
        for (Eigen::Index i = 0; i + 1 < n; ++i)
            CHECK(r.eigenvalues(i) >= r.eigenvalues(i + 1));
    }
}

TEST_CASE("orthonormalize keeps an orthonormal basis") {
    Matrix M = Matrix::Identity(3, 2);
    Matrix B = orthonormalize(M);
    CHECK(B.cols() == 2);
    CHECK((B * B.transpose() - M * M.transpose()).norm() < 1e-12);
}

TEST_CASE("orthonormalize spans the same plane as the oracle") {
    Matrix M(2, 2);
    M << 1, 1, 1, 0;
    Matrix B = orthonormalize(M);
    Matrix Q = gram_schmidt(M);
    REQUIRE(B.cols() == 2);
    CHECK((B.transpose() * B - Matrix::Identity(2, 2)).norm() < 1e-12);
    CHECK((B * B.transpose() - Q * Q.transpose()).norm() < 1e-10);
}

TEST_CASE("orthonormalize collapses dependent columns") {
    Matrix M(2, 2);
    M << 1, 2, 0, 0;
    Matrix B = orthonormalize(M, 1e-10);
    REQUIRE(B.cols() == 1);
    CHECK(std::abs(std::abs(B(0, 0)) - 1.0) < 1e-12);
    CHECK(std::abs(B(1, 0)) < 1e-12);
}

TEST_CASE("orthonormalize of the zero matrix is empty") {
    CHECK(orthonormalize(Matrix::Zero(3, 2)).cols() == 0);
}

TEST_CASE("orthonormalize projector idempotence on random input") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Matrix M = random_symmetric(6, seed).leftCols(4);
        Matrix B = orthonormalize(M);
        Matrix Q = gram_schmidt(M);
        CHECK((B * B.transpose() - Q * Q.transpose()).norm() < 1e-10);
        Matrix B2 = orthonormalize(B);
        CHECK((B2 * B2.transpose() - B * B.transpose()).norm() < 1e-10);
    }
}

TEST_CASE("min_singular_value basics") {
    CHECK(min_singular_value(Matrix::Identity(4, 4)) == doctest::Approx(1.0));
    CHECK(min_singular_value(Matrix::Zero(2, 2)) == doctest::Approx(0.0));
    Matrix D = Vector{{2.0, 0.5}}.asDiagonal();
    CHECK(min_singular_value(D) == doctest::Approx(0.5));
    CHECK_THROWS_AS(min_singular_value(Matrix(0, 0)), ContractError);
}

TEST_CASE("min_singular_value is transpose invariant") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Matrix M = random_symmetric(7, seed) + random_symmetric(7, seed + 100);
        M(0, 3) += 1.0; // break symmetry
        CHECK(min_singular_value(M) ==
              doctest::Approx(min_singular_value(M.transpose())).epsilon(1e-10));
    }
}

TEST_CASE("solve basics") {
    Vector b(3);
    b << 1, 2, 3;
    CHECK((solve(Matrix::Identity(3, 3), b) - b).norm() < 1e-12);

    Matrix D = Vector{{2.0, 4.0}}.asDiagonal();
    Vector rhs(2);
    rhs << 2, 4;
    Vector x = solve(D, rhs);
    CHECK(x(0) == doctest::Approx(1.0));
    CHECK(x(1) == doctest::Approx(1.0));
}

TEST_CASE("solve reports singularity with sigma_min") {
    Vector b(2);
    b << 1, 1;
    try {
        solve(Matrix::Zero(2, 2), b);
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.sigma_min() == doctest::Approx(0.0));
    }
}

TEST_CASE("solve residual on random systems") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Matrix M = random_symmetric(9, seed) + 3.0 * Matrix::Identity(9, 9);
        Matrix rhs = random_symmetric(9, seed + 50).leftCols(2);
        Matrix X = solve(M, rhs);
        CHECK((M * X - rhs).norm() <= 1e-9 * std::max(1.0, rhs.norm()));
    }
}
