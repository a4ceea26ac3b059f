#pragma once

#include "lagc/numerics.hpp"

namespace lagc {

/// Symplectic form degenerate to working tolerance.
class DegenerateFormError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Even-dimensional real inner-product space with an orthogonal complex
/// structure J representing the symplectic form omega = <J., .>.
struct SymplecticSpace {
    Eigen::Index dim = 0; // 2n
    Matrix J;             // complex structure, J^2 = -I
    Matrix gram;          // inner-product matrix, identity in the standard model

    Eigen::Index half_dim() const { return dim / 2; }
    bool is_standard(double tol = 1e-10) const;
};

/// A symplectic form before normalization: omega = <H., .> in the base
/// inner product, H anti-self-adjoint and invertible.
struct RawSymplecticForm {
    Matrix H;
    Matrix gram; // base inner product
};

/// The 2n-dimensional standard model: identity gram and block structure
/// J(x, y) = (-y, x) in coordinates (x_1..x_n, y_1..y_n).
SymplecticSpace standard_space(Eigen::Index n);

/// Normalizes omega = <H., .> to an orthogonal complex structure. With
/// H = P J the polar decomposition, the result carries gram' = G P and
/// J = P^{-1} H, so that <J., .>_{gram'} is the original form.
SymplecticSpace normalize(const RawSymplecticForm& raw);

struct StandardizedSpace {
    SymplecticSpace space;  // standard-model coordinates (gram = I)
    Matrix to_standard;     // isometry from original to standard coordinates
};

/// Change of basis taking a normalized space to the standard model
/// (gram = I). All geometry modules operate on standard-model spaces.
StandardizedSpace standardize(const SymplecticSpace& space);

/// omega(u, v) = <J u, v> in the space's inner product.
double omega(const SymplecticSpace& space, const Vector& u, const Vector& v);

/// Residual check of the SymplecticSpace invariants, returns the largest.
double space_residual(const SymplecticSpace& space);

} // namespace lagc
