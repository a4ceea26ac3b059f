#include "lagc/lagrangian.hpp"

#include "lagc/rng.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace lagc {

namespace {

void require_same_space(const SymplecticSpace& a, const SymplecticSpace& b) {
    if (a.dim != b.dim || (a.J - b.J).norm() > 1e-8 * std::max(1.0, a.J.norm()))
        throw ContractError("Lagrangians live in different symplectic spaces");
}

// Orthonormal 2n x 2n frame W = [u_1..u_n, J u_1..J u_n] intertwining the
// standard block J with the space's J: J W = W J_std.
Matrix j_adapted_frame(const SymplecticSpace& space) {
    const Eigen::Index d = space.dim;
    const Eigen::Index n = d / 2;
    Matrix U(d, n);
    Eigen::Index got = 0;
    for (Eigen::Index c = 0; c < d && got < n; ++c) {
        Vector v = Vector::Unit(d, c);
        // project out span(U, JU), twice for numerical hygiene
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index j = 0; j < got; ++j) {
                v -= U.col(j).dot(v) * U.col(j);
                Vector ju = space.J * U.col(j);
                v -= ju.dot(v) * ju;
            }
        }
        if (v.norm() > 0.3) {
            U.col(got++) = v / v.norm();
        }
    }
    if (got < n)
        throw std::runtime_error("j_adapted_frame: frame construction failed");
    Matrix W(d, d);
    W.leftCols(n) = U;
    W.rightCols(n) = space.J * U;
    return W;
}

} // namespace

LagrangianCheck is_lagrangian(const SymplecticSpace& space, const Matrix& basis,
                              double tol) {
    LagrangianCheck c;
    c.column_count = basis.cols();
    if (basis.rows() != space.dim)
        throw ContractError("is_lagrangian: basis has wrong row count");
    if (basis.cols() == 0)
        return c;
    const Matrix I = Matrix::Identity(basis.cols(), basis.cols());
    c.orthonormality_residual = (basis.transpose() * basis - I).norm();
    c.isotropy_residual = (basis.transpose() * space.J * basis).norm();
    c.ok = c.column_count == space.half_dim() && c.orthonormality_residual <= tol &&
           c.isotropy_residual <= tol;
    return c;
}

Lagrangian make_lagrangian(const SymplecticSpace& space, const Matrix& basis,
                           double tol) {
    auto check = is_lagrangian(space, basis, tol);
    if (!check.ok)
        throw ContractError("make_lagrangian: basis fails Lagrangian invariants"
                            " (orth " + std::to_string(check.orthonormality_residual) +
                            ", isotropy " + std::to_string(check.isotropy_residual) + ")");
    return Lagrangian{space, basis};
}

Matrix projection_matrix(const Lagrangian& L) {
    return L.basis * L.basis.transpose();
}

double gap_distance(const Lagrangian& L, const Lagrangian& Lp) {
    require_same_space(L.space, Lp.space);
    return operator_norm(projection_matrix(L) - projection_matrix(Lp));
}

Isotropic intersect(const Lagrangian& L, const Lagrangian& Lp) {
    require_same_space(L.space, Lp.space);
    const Matrix cross = L.basis.transpose() * Lp.basis;
    Eigen::JacobiSVD<Matrix> svd(cross, Eigen::ComputeThinU);
    Eigen::Index k = 0;
    while (k < svd.singularValues().size() &&
           svd.singularValues()(k) >= 1.0 - kAngleTol)
        ++k;
    if (k == 0)
        return Isotropic{L.space, Matrix(L.space.dim, 0)};

    // Alternating projection sharpens the near-unit principal directions
    // to vectors lying in both subspaces.
    Matrix C = L.basis * svd.matrixU().leftCols(k);
    for (int iter = 0; iter < 3; ++iter) {
        C = Lp.basis * (Lp.basis.transpose() * (L.basis * (L.basis.transpose() * C)));
        Eigen::JacobiSVD<Matrix> re(C, Eigen::ComputeThinU);
        C = re.matrixU().leftCols(k);
    }
    return Isotropic{L.space, C};
}

ComplementarityCheck is_complementary(const Lagrangian& L, const Lagrangian& Lp,
                                      double tau) {
    require_same_space(L.space, Lp.space);
    Matrix stacked(L.space.dim, L.basis.cols() + Lp.basis.cols());
    stacked << L.basis, Lp.basis;
    ComplementarityCheck c;
    c.sigma_min = min_singular_value(stacked);
    c.ok = c.sigma_min >= tau;
    return c;
}

Lagrangian orthogonal_complement(const Lagrangian& L) {
    return Lagrangian{L.space, L.space.J * L.basis};
}

Lagrangian horizontal_lagrangian(const SymplecticSpace& space) {
    const Eigen::Index n = space.half_dim();
    Matrix B = Matrix::Zero(space.dim, n);
    B.topRows(n) = Matrix::Identity(n, n);
    return make_lagrangian(space, B);
}

Lagrangian vertical_lagrangian(const SymplecticSpace& space) {
    const Eigen::Index n = space.half_dim();
    Matrix B = Matrix::Zero(space.dim, n);
    B.bottomRows(n) = Matrix::Identity(n, n);
    return make_lagrangian(space, B);
}

ReductionSplit reduction_split(const Lagrangian& L, const Lagrangian& Lp) {
    require_same_space(L.space, Lp.space);
    const Eigen::Index d = L.space.dim;
    const Eigen::Index n = d / 2;

    ReductionSplit split;
    split.S = intersect(L, Lp);
    const Eigen::Index k = split.S.dim();

    Matrix V1(d, 2 * k);
    if (k > 0) {
        V1 << split.S.basis, L.space.J * split.S.basis;
        V1 = orthonormalize(V1);
    }
    split.V1_basis = V1;

    // V2 = orthogonal complement of V1, taken from the full SVD so the
    // frame is deterministic.
    if (k == 0) {
        split.V2_basis = Matrix::Identity(d, d);
    } else {
        Eigen::JacobiSVD<Matrix> svd(V1, Eigen::ComputeFullU);
        split.V2_basis = svd.matrixU().rightCols(d - 2 * k);
    }

    const Eigen::Index m = d - 2 * k;
    split.induced.dim = m;
    split.induced.gram = Matrix::Identity(m, m);
    Matrix J2 = split.V2_basis.transpose() * L.space.J * split.V2_basis;
    split.induced.J = 0.5 * (J2 - J2.transpose());

    auto reduce = [&](const Matrix& B) {
        const Matrix coords = split.V2_basis.transpose() * B; // m x n
        if (m == 0)
            return Matrix(0, 0);
        Eigen::JacobiSVD<Matrix> svd(coords, Eigen::ComputeThinU);
        return Matrix(svd.matrixU().leftCols(n - k));
    };
    split.L_reduced = Lagrangian{split.induced, reduce(L.basis)};
    split.Lprime_reduced = Lagrangian{split.induced, reduce(Lp.basis)};
    return split;
}

Matrix lift_from_reduction(const ReductionSplit& split, const Matrix& reduced_basis) {
    return split.V2_basis * reduced_basis;
}

Matrix random_symmetric(Eigen::Index n, std::uint64_t seed) {
    GaussianSource rng(seed);
    Matrix A(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            A(i, j) = rng.gaussian();
    return 0.5 * (A + A.transpose());
}

Matrix random_unitary_rotation(Eigen::Index n, std::uint64_t seed) {
    GaussianSource rng(seed);
    Eigen::MatrixXcd Z(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            Z(i, j) = std::complex<double>(rng.gaussian(), rng.gaussian());
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(Z);
    Eigen::MatrixXcd Q = qr.householderQ();
    Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
        std::complex<double> r = R(j, j);
        const double a = std::abs(r);
        Q.col(j) *= a > 0 ? r / a : 1.0;
    }
    Matrix rot(2 * n, 2 * n);
    rot.topLeftCorner(n, n) = Q.real();
    rot.topRightCorner(n, n) = -Q.imag();
    rot.bottomLeftCorner(n, n) = Q.imag();
    rot.bottomRightCorner(n, n) = Q.real();
    return rot;
}

Lagrangian random_lagrangian(const SymplecticSpace& space, std::uint64_t seed) {
    const Eigen::Index n = space.half_dim();
    GaussianSource seeder(seed);
    const std::uint64_t seed_a = seeder.raw();
    const std::uint64_t seed_q = seeder.raw();

    Matrix graph(2 * n, n);
    graph.topRows(n) = Matrix::Identity(n, n);
    graph.bottomRows(n) = random_symmetric(n, seed_a);
    Matrix block_basis = random_unitary_rotation(n, seed_q) * orthonormalize(graph);

    Matrix W = space.is_standard(1e-8) &&
                       (space.J - standard_space(n).J).norm() <= 1e-8
                   ? Matrix(Matrix::Identity(2 * n, 2 * n))
                   : j_adapted_frame(space);
    return Lagrangian{space, W * block_basis};
}

} // namespace lagc
