#include "lagc/chart.hpp"

#include <cmath>

namespace lagc {

SymmetricOperator make_symmetric_operator(const Matrix& A, double tol) {
    if (A.rows() != A.cols())
        throw ContractError("make_symmetric_operator: matrix is not square");
    SymmetricOperator op{A};
    if (op.symmetry_residual() > tol * std::max(1.0, A.norm()))
        throw ContractError("make_symmetric_operator: matrix is not symmetric");
    op.A = 0.5 * (A + A.transpose());
    return op;
}

GraphChart make_chart(const Lagrangian& L0, const Lagrangian& L1) {
    auto comp = is_complementary(L0, L1);
    if (!comp.ok)
        throw ChartDomainError("make_chart: chart pair is not complementary, sigma_min = " +
                                   std::to_string(comp.sigma_min),
                               comp.sigma_min);
    GraphChart chart{L0, L1, L0.basis.transpose() * L0.space.J * L1.basis, comp.sigma_min};
    return chart;
}

Vector chart_map(const GraphChart& chart, const Vector& v) {
    const Eigen::Index n = chart.L0.half_dim();
    Matrix frame(2 * n, 2 * n);
    frame << chart.L0.basis, chart.L1.basis;
    Vector ab = solve(frame, v);
    Vector out(2 * n);
    out.head(n) = ab.head(n);
    out.tail(n) = -chart.rho * ab.tail(n);
    return out;
}

SymmetricOperator chart_encode(const GraphChart& chart, const Lagrangian& L) {
    if (L.space.dim != chart.L0.space.dim)
        throw ContractError("chart_encode: dimension mismatch");
    auto inter = intersect(L, chart.L1);
    if (inter.dim() > 0)
        throw NotInChartError("chart_encode: Lagrangian meets the chart vertical in dimension " +
                                  std::to_string(inter.dim()),
                              inter.dim());

    const Eigen::Index n = chart.L0.half_dim();
    Matrix frame(2 * n, 2 * n);
    frame << chart.L0.basis, chart.L1.basis;
    Matrix coords = solve(frame, L.basis); // 2n x n
    Matrix X = coords.topRows(n);
    Matrix Y = coords.bottomRows(n);
    // image of L is { (X c, -rho Y c) }; graph of -A forces A = rho Y X^{-1}
    Matrix A = chart.rho * solve(X.transpose(), Y.transpose()).transpose();
    return make_symmetric_operator(A);
}

Lagrangian chart_decode(const GraphChart& chart, const SymmetricOperator& A) {
    const Eigen::Index n = chart.L0.half_dim();
    if (A.size() != n)
        throw ContractError("chart_decode: operator size mismatch");
    Matrix raw = chart.L0.basis + chart.L1.basis * solve(chart.rho, A.A);
    return make_lagrangian(chart.L0.space, orthonormalize(raw));
}

ComplementarityCheck transversal_in_chart(const GraphChart& chart,
                                          const SymmetricOperator& A,
                                          const SymmetricOperator& Ap, double tau) {
    (void)chart;
    ComplementarityCheck c;
    c.sigma_min = min_singular_value(A.A - Ap.A);
    c.ok = c.sigma_min >= tau;
    return c;
}

} // namespace lagc
