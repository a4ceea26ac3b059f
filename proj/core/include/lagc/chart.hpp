#pragma once

#include "lagc/lagrangian.hpp"

namespace lagc {

/// Pair (L0, L1) requested as a chart domain is not complementary.
class ChartDomainError : public std::runtime_error {
public:
    ChartDomainError(const std::string& what, double sigma_min)
        : std::runtime_error(what), sigma_min_(sigma_min) {}
    double sigma_min() const { return sigma_min_; }

private:
    double sigma_min_;
};

/// Lagrangian meets the chart's vertical L1 nontrivially, so it has no
/// chart coordinate.
class NotInChartError : public std::runtime_error {
public:
    NotInChartError(const std::string& what, Eigen::Index intersection_dim)
        : std::runtime_error(what), intersection_dim_(intersection_dim) {}
    Eigen::Index intersection_dim() const { return intersection_dim_; }

private:
    Eigen::Index intersection_dim_;
};

/// Symmetric n x n chart coordinate of a Lagrangian.
struct SymmetricOperator {
    Matrix A;

    Eigen::Index size() const { return A.rows(); }
    double symmetry_residual() const { return (A - A.transpose()).norm(); }
};

SymmetricOperator make_symmetric_operator(const Matrix& A, double tol = 1e-8);

/// Coordinate chart on the Lagrangians transverse to L1, built from a
/// complementary pair V = L0 + L1. The map
///   x + y  |->  (x, -rho(y)),   rho = P_{L0} o J restricted to L1,
/// identifies V with L0 + L0 and carries such Lagrangians to graphs of
/// symmetric operators on L0.
struct GraphChart {
    Lagrangian L0;
    Lagrangian L1;
    Matrix rho;        // n x n, coordinates of rho in the stored frames
    double sigma_min;  // of the stacked pair basis, recorded at build time
};

GraphChart make_chart(const Lagrangian& L0, const Lagrangian& L1);

/// Image of an ambient vector under the chart's coordinate map, as a
/// 2n-vector (u, w) of L0 + L0 coordinates.
Vector chart_map(const GraphChart& chart, const Vector& v);

/// Chart coordinate A with the image of L equal to the graph of -A.
SymmetricOperator chart_encode(const GraphChart& chart, const Lagrangian& L);

/// Lagrangian with chart coordinate A; always transverse to L1.
Lagrangian chart_decode(const GraphChart& chart, const SymmetricOperator& A);

/// Transversality of the decoded Lagrangians, decided inside the chart:
/// decode(A) and decode(A') are complementary iff A - A' is invertible.
ComplementarityCheck transversal_in_chart(const GraphChart& chart,
                                          const SymmetricOperator& A,
                                          const SymmetricOperator& Ap,
                                          double tau = kTransversalTol);

} // namespace lagc
