#include "lagc/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace lagc {

SymmetricEigenResult symmetric_eigen(const Matrix& S) {
    if (S.rows() != S.cols())
        throw ContractError("symmetric_eigen: matrix is not square");
    const double scale = std::max(1.0, S.norm());
    if ((S - S.transpose()).norm() > 1e-12 * scale)
        throw ContractError("symmetric_eigen: matrix is not symmetric");

    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (S + S.transpose()));
    if (es.info() != Eigen::Success)
        throw std::runtime_error("symmetric_eigen: eigensolver did not converge");

    const Eigen::Index n = S.rows();
    SymmetricEigenResult r;
    r.eigenvalues = es.eigenvalues().reverse();
    r.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        r.eigenvectors.col(k) = es.eigenvectors().col(n - 1 - k);
    return r;
}

Matrix orthonormalize(const Matrix& M, double rank_tol) {
    if (M.cols() == 0)
        return Matrix(M.rows(), 0);

    double max_col_norm = 0.0;
    for (Eigen::Index j = 0; j < M.cols(); ++j)
        max_col_norm = std::max(max_col_norm, M.col(j).norm());
    const double tau = rank_tol * std::max(1.0, max_col_norm);

    Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeThinU);
    Eigen::Index rank = 0;
    while (rank < svd.singularValues().size() && svd.singularValues()(rank) > tau)
        ++rank;
    return svd.matrixU().leftCols(rank);
}

double min_singular_value(const Matrix& M) {
    if (M.size() == 0)
        throw ContractError("min_singular_value: empty matrix");
    Eigen::JacobiSVD<Matrix> svd(M);
    return svd.singularValues().tail(1)(0);
}

double operator_norm(const Matrix& M) {
    if (M.size() == 0)
        return 0.0;
    Eigen::JacobiSVD<Matrix> svd(M);
    return svd.singularValues()(0);
}

Matrix solve(const Matrix& M, const Matrix& rhs, double singularity_tol) {
    if (M.rows() != M.cols())
        throw ContractError("solve: matrix is not square");
    if (M.rows() != rhs.rows())
        throw ContractError("solve: rhs row count mismatch");

    Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double sigma_min = sv.size() ? sv.tail(1)(0) : 0.0;
    const double sigma_max = sv.size() ? sv(0) : 0.0;
    if (sigma_min <= singularity_tol * sigma_max)
        throw SingularMatrixError("solve: matrix singular to tolerance", sigma_min);

    return svd.solve(rhs);
}

} // namespace lagc
