#pragma once

#include "lagc/lagrangian.hpp"

#include <vector>

namespace lagc {

/// Finite discrete measure space: m atoms with positive weights.
struct DiscreteMeasureSpace {
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
};

DiscreteMeasureSpace make_measure_space(std::vector<double> weights);

/// Multiplication operator M_f on L^2 of a discrete measure space,
/// given by its pointwise values.
struct Multiplier {
    DiscreteMeasureSpace space;
    std::vector<double> values;
};

Multiplier make_multiplier(DiscreteMeasureSpace space, std::vector<double> values);

/// Graph of M_f as a Lagrangian of the standard 2m space, expressed in
/// the mu-orthonormal frame: column i is (e_i, f_i e_i) / sqrt(1 + f_i^2).
Lagrangian graph_lagrangian(const Multiplier& mult);

/// Pointwise band shift g = eps on {|f| <= eps/2} (closed band), 0 off
/// it, so that |f - g| >= eps/2 everywhere.
Multiplier lemma3_shift(const Multiplier& mult, double epsilon);

struct StressRow {
    std::size_t m = 0;
    double max_f = 0.0;
    double min_gap = 0.0;              // min |f - g| after the band shift
    double sigma_min_vertical = 0.0;   // of [graph basis | vertical basis]
};

/// Growing-multiplier harness: f_m(i) = tan(pi/2 * i/(m+1)), i = 1..m.
/// max|f| grows without bound while the band shift stays uniformly
/// well-conditioned; sigma_min against the vertical decays toward 0.
std::vector<StressRow> unbounded_stress(const std::vector<std::size_t>& m_list,
                                        double epsilon);

} // namespace lagc
