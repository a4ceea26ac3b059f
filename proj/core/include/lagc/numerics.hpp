#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace lagc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Violated operation precondition (bad shapes, asymmetric input, ...).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Linear system whose matrix is singular to working tolerance.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(const std::string& what, double sigma_min)
        : std::runtime_error(what), sigma_min_(sigma_min) {}
    double sigma_min() const { return sigma_min_; }

private:
    double sigma_min_;
};

struct SymmetricEigenResult {
    Vector eigenvalues; // sorted descending
    Matrix eigenvectors; // orthogonal, column k pairs with eigenvalue k
};

/// Spectral decomposition S = U diag(lambda) U^T of a symmetric matrix.
/// Eigenvalues come back sorted descending. Input symmetry residual must
/// satisfy |S - S^T| <= 1e-12 * max(1, |S|).
SymmetricEigenResult symmetric_eigen(const Matrix& S);

/// Orthonormal basis of the numerical column space of M. Rank is decided
/// at the absolute-plus-relative threshold rank_tol * max(1, largest
/// column norm). A zero matrix yields a zero-column result.
Matrix orthonormalize(const Matrix& M, double rank_tol = 1e-10);

/// Smallest singular value of a nonempty matrix.
double min_singular_value(const Matrix& M);

/// Largest singular value (operator norm).
double operator_norm(const Matrix& M);

/// Solves M X = rhs for square M. Throws SingularMatrixError (carrying
/// sigma_min) when sigma_min(M) <= singularity_tol * |M|.
Matrix solve(const Matrix& M, const Matrix& rhs, double singularity_tol = 1e-12);

} // namespace lagc
