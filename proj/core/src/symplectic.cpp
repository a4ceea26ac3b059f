#include "lagc/symplectic.hpp"

#include <cmath>

namespace lagc {

namespace {

// Symmetric square root and its inverse via one spectral decomposition.
// Eigenvalues must be positive; smallest one is reported to the caller.
struct SqrtPair {
    Matrix root;
    Matrix inv_root;
    double lambda_min;
};

SqrtPair symmetric_sqrt(const Matrix& S) {
    auto eig = symmetric_eigen(0.5 * (S + S.transpose()));
    const Eigen::Index n = S.rows();
    SqrtPair out;
    out.lambda_min = eig.eigenvalues(n - 1);
    Vector r(n), ri(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double lam = std::max(eig.eigenvalues(i), 0.0);
        r(i) = std::sqrt(lam);
        ri(i) = lam > 0.0 ? 1.0 / r(i) : 0.0;
    }
    out.root = eig.eigenvectors * r.asDiagonal() * eig.eigenvectors.transpose();
    out.inv_root = eig.eigenvectors * ri.asDiagonal() * eig.eigenvectors.transpose();
    return out;
}

} // namespace

bool SymplecticSpace::is_standard(double tol) const {
    return (gram - Matrix::Identity(dim, dim)).norm() <= tol;
}

SymplecticSpace standard_space(Eigen::Index n) {
    if (n < 1)
        throw ContractError("standard_space: n must be at least 1");
    SymplecticSpace s;
    s.dim = 2 * n;
    s.gram = Matrix::Identity(2 * n, 2 * n);
    s.J = Matrix::Zero(2 * n, 2 * n);
    // J(x, y) = (-y, x)
    s.J.topRightCorner(n, n) = -Matrix::Identity(n, n);
    s.J.bottomLeftCorner(n, n) = Matrix::Identity(n, n);
    return s;
}

SymplecticSpace normalize(const RawSymplecticForm& raw) {
    const Eigen::Index d = raw.H.rows();
    if (d == 0 || raw.H.cols() != d || d % 2 != 0)
        throw ContractError("normalize: H must be square with even dimension");
    Matrix G = raw.gram.size() ? raw.gram : Matrix::Identity(d, d);
    if (G.rows() != d || G.cols() != d)
        throw ContractError("normalize: gram dimension mismatch");
    if ((G - G.transpose()).norm() > 1e-10 * std::max(1.0, G.norm()))
        throw ContractError("normalize: gram is not symmetric");

    auto g = symmetric_sqrt(G);
    if (g.lambda_min <= 0.0)
        throw ContractError("normalize: gram is not positive definite");

    // Anti-self-adjointness w.r.t. G reads H^T G = -G H.
    const Matrix GH = G * raw.H;
    if ((raw.H.transpose() * G + GH).norm() > 1e-10 * std::max(1.0, GH.norm()))
        throw ContractError("normalize: H is not anti-self-adjoint w.r.t. gram");

    // Work in a G-orthonormal frame, where H becomes a plain skew matrix.
    Matrix Hs = g.root * raw.H * g.inv_root;
    Hs = 0.5 * (Hs - Hs.transpose());

    const double hmin = min_singular_value(Hs);
    if (hmin <= 1e-10 * std::max(1.0, operator_norm(Hs)))
        throw DegenerateFormError("normalize: symplectic form degenerate, sigma_min(H) = " +
                                  std::to_string(hmin));

    // Polar factor P = (-H^2)^{1/2}; P commutes with H, so J = P^{-1} H.
    auto p = symmetric_sqrt(-(Hs * Hs));

    SymplecticSpace out;
    out.dim = d;
    out.J = g.inv_root * (p.inv_root * Hs) * g.root;
    Matrix gram_new = g.root * p.root * g.root;
    out.gram = 0.5 * (gram_new + gram_new.transpose());
    return out;
}

StandardizedSpace standardize(const SymplecticSpace& space) {
    auto g = symmetric_sqrt(space.gram);
    if (g.lambda_min <= 0.0)
        throw ContractError("standardize: gram is not positive definite");

    Matrix Js = g.root * space.J * g.inv_root;
    Js = 0.5 * (Js - Js.transpose());

    StandardizedSpace out;
    out.space.dim = space.dim;
    out.space.gram = Matrix::Identity(space.dim, space.dim);
    out.space.J = Js;
    out.to_standard = g.root;
    return out;
}

double omega(const SymplecticSpace& space, const Vector& u, const Vector& v) {
    if (u.size() != space.dim || v.size() != space.dim)
        throw ContractError("omega: vector dimension mismatch");
    return (space.J * u).dot(space.gram * v);
}

double space_residual(const SymplecticSpace& space) {
    const Matrix I = Matrix::Identity(space.dim, space.dim);
    const double r_sq = (space.J * space.J + I).norm();
    const double r_orth = (space.J.transpose() * space.gram * space.J - space.gram).norm();
    const double r_sym = (space.gram - space.gram.transpose()).norm();
    return std::max({r_sq, r_orth, r_sym});
}

} // namespace lagc
