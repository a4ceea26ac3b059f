#include "lagc/opmodel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace lagc {

DiscreteMeasureSpace make_measure_space(std::vector<double> weights) {
    if (weights.empty())
        throw ContractError("make_measure_space: at least one atom required");
    for (double w : weights)
        if (!(w > 0.0) || !std::isfinite(w))
            throw ContractError("make_measure_space: weights must be positive and finite");
    return DiscreteMeasureSpace{std::move(weights)};
}

Multiplier make_multiplier(DiscreteMeasureSpace space, std::vector<double> values) {
    if (values.size() != space.size())
        throw ContractError("make_multiplier: value count must match atom count");
    for (double v : values)
        if (!std::isfinite(v))
            throw ContractError("make_multiplier: values must be finite");
    return Multiplier{std::move(space), std::move(values)};
}

Lagrangian graph_lagrangian(const Multiplier& mult) {
    // The mu-orthonormal frame e_i / sqrt(mu_i) diagonalizes M_f with the
    // same values f_i, so the graph basis is weight-independent here.
    const Eigen::Index m = static_cast<Eigen::Index>(mult.values.size());
    Matrix B = Matrix::Zero(2 * m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double f = mult.values[static_cast<std::size_t>(i)];
        const double s = 1.0 / std::sqrt(1.0 + f * f);
        B(i, i) = s;
        B(m + i, i) = f * s;
    }
    return make_lagrangian(standard_space(m), B);
}

Multiplier lemma3_shift(const Multiplier& mult, double epsilon) {
    if (!(epsilon > 0.0))
        throw ContractError("lemma3_shift: epsilon must be positive");
    std::vector<double> g(mult.values.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        g[i] = std::abs(mult.values[i]) <= epsilon / 2 ? epsilon : 0.0;
    return Multiplier{mult.space, std::move(g)};
}

std::vector<StressRow> unbounded_stress(const std::vector<std::size_t>& m_list,
                                        double epsilon) {
    if (m_list.empty())
        throw ContractError("unbounded_stress: m_list must be nonempty");
    if (!(epsilon > 0.0))
        throw ContractError("unbounded_stress: epsilon must be positive");

    std::vector<StressRow> rows;
    rows.reserve(m_list.size());
    for (std::size_t m : m_list) {
        std::vector<double> f(m);
        for (std::size_t i = 1; i <= m; ++i)
            f[i - 1] = std::tan(std::numbers::pi / 2 * static_cast<double>(i) /
                                static_cast<double>(m + 1));
        auto mult = make_multiplier(make_measure_space(std::vector<double>(m, 1.0)), f);
        auto shifted = lemma3_shift(mult, epsilon);

        StressRow row;
        row.m = m;
        row.min_gap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            row.max_f = std::max(row.max_f, std::abs(f[i]));
            row.min_gap = std::min(row.min_gap, std::abs(f[i] - shifted.values[i]));
        }

        auto graph = graph_lagrangian(mult);
        // vertical = {0} + H
        Matrix V = Matrix::Zero(2 * static_cast<Eigen::Index>(m),
                                static_cast<Eigen::Index>(m));
        V.bottomRows(static_cast<Eigen::Index>(m)) =
            Matrix::Identity(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
        Matrix stacked(2 * static_cast<Eigen::Index>(m), 2 * static_cast<Eigen::Index>(m));
        stacked << graph.basis, V;
        row.sigma_min_vertical = min_singular_value(stacked);
        rows.push_back(row);
    }
    return rows;
}

} // namespace lagc
