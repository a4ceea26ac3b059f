#include "lagc/chart.hpp"
#include "lagc/complement.hpp"
#include "lagc/opmodel.hpp"
#include "lagc/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace lagc;

namespace {

Multiplier multiplier(std::vector<double> weights, std::vector<double> values) {
    return make_multiplier(make_measure_space(std::move(weights)), std::move(values));
}

} // namespace

TEST_CASE("measure space and multiplier validation") {
    CHECK_THROWS_AS(make_measure_space({}), ContractError);
    CHECK_THROWS_AS(make_measure_space({1.0, 0.0}), ContractError);
    CHECK_THROWS_AS(make_measure_space({-1.0}), ContractError);
    CHECK_THROWS_AS(make_multiplier(make_measure_space({1.0}), {1.0, 2.0}), ContractError);
}

TEST_CASE("graph_lagrangian of the zero multiplier is horizontal") {
    auto L = graph_lagrangian(multiplier({1, 1, 1}, {0, 0, 0}));
    CHECK(gap_distance(L, horizontal_lagrangian(L.space)) < 1e-12);
}

TEST_CASE("graph_lagrangian of a single atom") {
    auto L = graph_lagrangian(multiplier({1}, {2}));
    Vector expected(2);
    expected << 1, 2;
    expected.normalize();
    CHECK(std::abs(std::abs(L.basis.col(0).dot(expected)) - 1.0) < 1e-12);
}

TEST_CASE("graph_lagrangian encodes to -diag(f) in the standard chart") {
    GaussianSource rng(41);
    std::vector<double> w(10), f(10);
    for (std::size_t i = 0; i < 10; ++i) {
        w[i] = 0.1 + rng.uniform();
        f[i] = 3.0 * rng.gaussian();
    }
    auto L = graph_lagrangian(multiplier(w, f));
    CHECK(is_lagrangian(L.space, L.basis).ok);

    auto chart = make_chart(horizontal_lagrangian(L.space), vertical_lagrangian(L.space));
    auto A = chart_encode(chart, L);
    Matrix expected = Matrix::Zero(10, 10);
    for (Eigen::Index i = 0; i < 10; ++i)
        expected(i, i) = -f[static_cast<std::size_t>(i)];
    CHECK((A.A - expected).norm() < 1e-9 * std::max(1.0, expected.norm()));
}

TEST_CASE("graph_lagrangian respects the weighted inner product") {
    // in the original weighted frame the graph columns are (e_i, f_i e_i);
    // the isometry phi -> sqrt(mu) phi carries them to the stored basis
    GaussianSource rng(43);
    const Eigen::Index m = 6;
    std::vector<double> w(m), f(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        w[i] = 0.2 + rng.uniform();
        f[i] = rng.gaussian();
    }
    auto L = graph_lagrangian(multiplier(w, f));

    Matrix Gw = Matrix::Zero(2 * m, 2 * m);
    Matrix Bw = Matrix::Zero(2 * m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        Gw(i, i) = w[static_cast<std::size_t>(i)];
        Gw(m + i, m + i) = w[static_cast<std::size_t>(i)];
        const double norm = std::sqrt(w[static_cast<std::size_t>(i)] * (1 + f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(i)]));
        Bw(i, i) = 1.0 / norm;
        Bw(m + i, i) = f[static_cast<std::size_t>(i)] / norm;
    }
    // weighted orthonormality and isotropy
    CHECK((Bw.transpose() * Gw * Bw - Matrix::Identity(m, m)).norm() < 1e-9);
    CHECK((Bw.transpose() * Gw * L.space.J * Bw).norm() < 1e-9);
    // isometry matches the stored standard-frame basis
    Matrix iso = Gw.cwiseSqrt();
    CHECK((iso * Bw - L.basis).norm() < 1e-9);
}

TEST_CASE("lemma3_shift band rule") {
    auto g1 = lemma3_shift(multiplier({1, 1, 1}, {0, 1, 0.3}), 1.0);
    CHECK(g1.values == std::vector<double>{1.0, 0.0, 1.0});

    auto g2 = lemma3_shift(multiplier({1, 1}, {0, 0}), 0.25);
    CHECK(g2.values == std::vector<double>{0.25, 0.25});

    auto g3 = lemma3_shift(multiplier({1, 1}, {3, -4}), 1.0);
    CHECK(g3.values == std::vector<double>{0.0, 0.0});

    // closed band: |f| = eps/2 is shifted
    auto g4 = lemma3_shift(multiplier({1}, {0.5}), 1.0);
    CHECK(g4.values == std::vector<double>{1.0});

    CHECK_THROWS_AS(lemma3_shift(multiplier({1}, {0.0}), 0.0), ContractError);
}

TEST_CASE("lemma3_shift pointwise gap and inverse bound") {
    GaussianSource rng(44);
    for (int t = 0; t < 10; ++t) {
        const double eps = std::pow(10.0, -2 + (t % 5));
        std::vector<double> w(12, 1.0), f(12);
        for (auto& v : f)
            v = 2.0 * rng.gaussian();
        auto mult = multiplier(w, f);
        auto g = lemma3_shift(mult, eps);
        double min_gap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(std::abs(f[i] - g.values[i]) >= eps / 2);
            CHECK(std::abs(g.values[i]) <= eps);
            min_gap = std::min(min_gap, std::abs(f[i] - g.values[i]));
        }
        CHECK(1.0 / min_gap <= 2.0 / eps + 1e-12);
    }
}

TEST_CASE("lemma3_shift agrees with spectral_shift on diagonal operators") {
    GaussianSource rng(45);
    std::vector<double> f(8);
    for (auto& v : f)
        v = rng.gaussian();
    auto mult = multiplier(std::vector<double>(8, 1.0), f);
    auto g = lemma3_shift(mult, 1.0);

    Matrix A = Matrix::Zero(8, 8);
    for (Eigen::Index i = 0; i < 8; ++i)
        A(i, i) = f[static_cast<std::size_t>(i)];
    auto shifted = spectral_shift(make_symmetric_operator(A), 1.0);
    Matrix expected = Matrix::Zero(8, 8);
    for (Eigen::Index i = 0; i < 8; ++i)
        expected(i, i) = g.values[static_cast<std::size_t>(i)];
    CHECK((shifted.A_prime.A - expected).norm() < 1e-12);
}

TEST_CASE("unbounded_stress tangent grid values") {
    auto rows = unbounded_stress({4}, 1.0);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].max_f == doctest::Approx(std::tan(2 * std::numbers::pi / 5)));
    CHECK(rows[0].max_f == doctest::Approx(3.0777).epsilon(1e-4));
    CHECK(rows[0].min_gap >= 0.5);
}

TEST_CASE("unbounded_stress trend: growth up, vertical margin down") {
    auto rows = unbounded_stress({8, 16, 32}, 1.0);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        CHECK(rows[i].max_f < rows[i + 1].max_f);
        CHECK(rows[i].sigma_min_vertical > rows[i + 1].sigma_min_vertical);
    }
    for (const auto& r : rows)
        CHECK(r.min_gap >= 0.5);
}
