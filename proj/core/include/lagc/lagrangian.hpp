#pragma once

#include "lagc/symplectic.hpp"

#include <cstdint>

namespace lagc {

/// Default floor on sigma_min([B | B']) below which a pair of Lagrangians
/// is considered non-transverse.
inline constexpr double kTransversalTol = 1e-8;

/// Principal-angle cutoff for intersection detection: cosines at or above
/// 1 - kAngleTol count as intersection directions.
inline constexpr double kAngleTol = 1e-10;

/// n-dimensional subspace of a 2n-dimensional standard-model space,
/// stored as a 2n x n matrix with orthonormal columns, B^T J B = 0.
struct Lagrangian {
    SymplecticSpace space;
    Matrix basis;

    Eigen::Index half_dim() const { return space.half_dim(); }
};

/// Isotropic subspace of dimension k <= n, same representation.
struct Isotropic {
    SymplecticSpace space;
    Matrix basis; // 2n x k, possibly zero columns

    Eigen::Index dim() const { return basis.cols(); }
};

struct LagrangianCheck {
    bool ok = false;
    double orthonormality_residual = 0.0; // |B^T B - I|
    double isotropy_residual = 0.0;       // |B^T J B|
    Eigen::Index column_count = 0;
};

struct ComplementarityCheck {
    bool ok = false;
    double sigma_min = 0.0; // of the stacked 2n x 2n basis [B | B']
};

/// Orthogonal direct sum V = (S + J(S)) + V2 for S = L intersect L',
/// with both summands J-invariant and the reduced pair living in the
/// induced symplectic space on V2.
struct ReductionSplit {
    Isotropic S;
    Matrix V1_basis;              // 2n x 2k, spans S + J(S)
    Matrix V2_basis;              // 2n x (2n - 2k) orthonormal frame of V1-perp
    SymplecticSpace induced;      // standard-model space on V2 coordinates
    Lagrangian L_reduced;         // P_{V2}(L) in V2 coordinates
    Lagrangian Lprime_reduced;    // P_{V2}(L') in V2 coordinates
};

LagrangianCheck is_lagrangian(const SymplecticSpace& space, const Matrix& basis,
                              double tol = 1e-8);

/// Wraps a basis as a Lagrangian after validating it.
Lagrangian make_lagrangian(const SymplecticSpace& space, const Matrix& basis,
                           double tol = 1e-8);

/// Orthogonal projection B B^T onto L; satisfies P^2 = P, P^T = P and
/// P J + J P = J.
Matrix projection_matrix(const Lagrangian& L);

/// Gap distance |P_L - P_L'| in operator norm; a metric on Lambda(V)
/// with values in [0, 1].
double gap_distance(const Lagrangian& L, const Lagrangian& Lp);

/// Intersection L /\ L' as an isotropic subspace. Rank is decided by
/// principal angles (cosines >= 1 - kAngleTol), the basis then refined by
/// alternating projection so it lies in both subspaces.
Isotropic intersect(const Lagrangian& L, const Lagrangian& Lp);

ComplementarityCheck is_complementary(const Lagrangian& L, const Lagrangian& Lp,
                                      double tau = kTransversalTol);

/// J(L), which for a Lagrangian is the orthogonal complement L-perp.
Lagrangian orthogonal_complement(const Lagrangian& L);

/// The coordinate Lagrangians of the standard model: span(e_1..e_n) and
/// span(e_{n+1}..e_{2n}). Only valid for spaces with the standard block J.
Lagrangian horizontal_lagrangian(const SymplecticSpace& space);
Lagrangian vertical_lagrangian(const SymplecticSpace& space);

ReductionSplit reduction_split(const Lagrangian& L, const Lagrangian& Lp);

/// Maps a basis expressed in V2-frame coordinates back to the ambient space.
Matrix lift_from_reduction(const ReductionSplit& split, const Matrix& reduced_basis);

/// Seeded random Lagrangian: the graph of a random symmetric matrix over
/// a frame rotated by a random J-commuting orthogonal map. Deterministic
/// per seed.
Lagrangian random_lagrangian(const SymplecticSpace& space, std::uint64_t seed);

/// Random symmetric n x n matrix with Gaussian entries, deterministic per seed.
Matrix random_symmetric(Eigen::Index n, std::uint64_t seed);

/// Random rotation commuting with the standard J (a real image of U(n)).
Matrix random_unitary_rotation(Eigen::Index n, std::uint64_t seed);

} // namespace lagc
