#include "lagc/complement.hpp"

#include "lagc/rng.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace lagc {

bool TransversalityCertificate::all_pass() const {
    for (const auto& m : members)
        if (m.sigma_min < tau_transversal)
            return false;
    auto check = is_lagrangian(candidate.space, candidate.basis);
    return check.ok;
}

ShiftResult spectral_shift(const SymmetricOperator& A, double epsilon) {
    if (!(epsilon > 0.0))
        throw ContractError("spectral_shift: epsilon must be positive");
    auto eig = symmetric_eigen(A.A);
    const Eigen::Index n = A.size();
    Vector g(n);
    double min_gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
        const double lam = eig.eigenvalues(i);
        g(i) = std::abs(lam) <= epsilon / 2 ? epsilon : 0.0;
        min_gap = std::min(min_gap, std::abs(lam - g(i)));
    }
    Matrix Ap = eig.eigenvectors * g.asDiagonal() * eig.eigenvectors.transpose();
    // reconstruction rounding can push the norm a few ulps past epsilon
    const double s = operator_norm(Ap);
    if (s > epsilon)
        Ap *= epsilon / s;
    ShiftResult out;
    out.A_prime = make_symmetric_operator(Ap);
    out.epsilon = epsilon;
    out.min_gap = min_gap;
    return out;
}

TransversalityCertificate certify(const Lagrangian& candidate,
                                  std::span<const Lagrangian> family,
                                  const EngineConfig& config, EngineTrace trace) {
    TransversalityCertificate cert;
    cert.candidate = candidate;
    cert.tau_transversal = config.tau_transversal;
    cert.seed = config.seed;
    cert.trace = trace;
    cert.members.reserve(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        MemberRecord rec;
        rec.id = i;
        rec.sigma_min = is_complementary(family[i], candidate, config.tau_transversal).sigma_min;
        auto check = is_lagrangian(family[i].space, family[i].basis);
        rec.orthonormality_residual = check.orthonormality_residual;
        rec.isotropy_residual = check.isotropy_residual;
        cert.members.push_back(rec);
    }
    return cert;
}

std::pair<Lagrangian, TransversalityCertificate>
pair_complement_transverse(const Lagrangian& L1, const Lagrangian& L,
                           const EngineConfig& config) {
    auto inter = intersect(L1, L);
    if (inter.dim() > 0)
        throw ContractError("pair_complement_transverse: inputs intersect in dimension " +
                            std::to_string(inter.dim()) +
                            "; use pair_complement_general");

    auto chart = make_chart(orthogonal_complement(L1), L1);
    auto A = chart_encode(chart, L);
    const double eps =
        config.epsilon > 0 ? config.epsilon : std::max(1.0, operator_norm(A.A) / 2);
    auto shift = spectral_shift(A, eps);
    Lagrangian cand = chart_decode(chart, shift.A_prime);

    const Lagrangian fam[] = {L1, L};
    return {cand, certify(cand, fam, config)};
}

std::pair<Lagrangian, TransversalityCertificate>
pair_complement_general(const Lagrangian& L, const Lagrangian& Lp,
                        const EngineConfig& config) {
    auto split = reduction_split(L, Lp);
    const Lagrangian fam[] = {L, Lp};

    if (split.S.dim() == 0) {
        auto [cand, cert] = pair_complement_transverse(Lp, L, config);
        return {cand, certify(cand, fam, config, cert.trace)};
    }

    Lagrangian cand;
    if (split.induced.dim == 0) {
        // L = L'; the orthogonal complement works.
        cand = orthogonal_complement(L);
    } else {
        auto [R, _] =
            pair_complement_transverse(split.Lprime_reduced, split.L_reduced, config);
        Matrix B(L.space.dim, L.half_dim());
        B << L.space.J * split.S.basis, lift_from_reduction(split, R.basis);
        cand = make_lagrangian(L.space, orthonormalize(B));
    }
    return {cand, certify(cand, fam, config)};
}

Lagrangian refine_against(const Lagrangian& candidate, const Lagrangian& obstacle,
                          std::span<const Lagrangian> family_sofar,
                          const EngineConfig& config, EngineTrace* trace) {
    if (is_complementary(candidate, obstacle, config.tau_transversal).ok) {
        if (trace)
            trace->final_delta = 0.0;
        return candidate;
    }

    // Chart vertical transverse to both the candidate and the obstacle.
    auto [M, ignored] = pair_complement_general(candidate, obstacle, config);
    auto chart = make_chart(orthogonal_complement(M), M);
    auto A = chart_encode(chart, candidate);
    auto A_obs = chart_encode(chart, obstacle);
    auto B = make_symmetric_operator(A.A - A_obs.A);

    for (double delta = config.delta0; delta >= config.delta_floor; delta /= 2) {
        if (trace)
            ++trace->iterations;
        auto shift = spectral_shift(B, delta);
        Lagrangian refined =
            chart_decode(chart, make_symmetric_operator(A.A - shift.A_prime.A));
        bool ok = is_complementary(refined, obstacle, config.tau_transversal).ok;
        for (std::size_t i = 0; ok && i < family_sofar.size(); ++i)
            ok = is_complementary(refined, family_sofar[i], config.tau_transversal).ok;
        if (ok) {
            if (trace)
                trace->final_delta = delta;
            return refined;
        }
    }
    throw RefinementError("refine_against: delta underflow below " +
                          std::to_string(config.delta_floor));
}

TransversalityCertificate family_complement(std::span<const Lagrangian> family,
                                            const EngineConfig& config) {
    if (family.empty())
        throw ContractError("family_complement: empty family");

    EngineTrace trace;
    Lagrangian candidate = orthogonal_complement(family[0]);
    for (std::size_t i = 1; i < family.size(); ++i)
        candidate =
            refine_against(candidate, family[i], family.first(i), config, &trace);
    return certify(candidate, family, config, trace);
}

TransversalityCertificate
stream_complement(const std::function<Lagrangian(std::size_t)>& next,
                  std::size_t prefix_length, const EngineConfig& config) {
    if (prefix_length == 0)
        throw ContractError("stream_complement: empty prefix");

    EngineTrace trace;
    std::vector<Lagrangian> seen;
    seen.push_back(next(0));
    Lagrangian candidate = orthogonal_complement(seen[0]);
    for (std::size_t i = 1; i < prefix_length; ++i) {
        Lagrangian member = next(i);
        candidate = refine_against(candidate, member, seen, config, &trace);
        seen.push_back(std::move(member));
        // re-certify the prefix after each pull
        auto cert = certify(candidate, seen, config, trace);
        if (!cert.all_pass())
            throw RefinementError("stream_complement: prefix certificate failed at " +
                                  std::to_string(i));
    }
    return certify(candidate, seen, config, trace);
}

TransversalityCertificate randomized_complement(std::span<const Lagrangian> family,
                                                std::uint64_t seed,
                                                std::size_t max_tries,
                                                const EngineConfig& config) {
    if (family.empty())
        throw ContractError("randomized_complement: empty family");

    const Eigen::Index n = family[0].half_dim();
    auto chart = make_chart(orthogonal_complement(family[0]), family[0]);
    GaussianSource seeder(seed);

    std::vector<double> worst(family.size(), 0.0);
    for (std::size_t t = 1; t <= max_tries; ++t) {
        auto A = make_symmetric_operator(random_symmetric(n, seeder.raw()));
        Lagrangian cand = chart_decode(chart, A);
        bool ok = true;
        for (std::size_t i = 0; i < family.size(); ++i) {
            const double s =
                is_complementary(family[i], cand, config.tau_transversal).sigma_min;
            worst[i] = std::max(worst[i], s);
            if (s < config.tau_transversal)
                ok = false;
        }
        if (ok) {
            EngineConfig cfg = config;
            cfg.seed = seed;
            return certify(cand, family, cfg, EngineTrace{t, 0.0});
        }
    }
    throw SamplingError("randomized_complement: exhausted " + std::to_string(max_tries) +
                            " tries",
                        worst);
}

} // namespace lagc
