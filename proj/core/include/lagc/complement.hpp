#pragma once

#include "lagc/chart.hpp"

#include <functional>
#include <span>
#include <vector>

namespace lagc {

/// Delta-halving loop bottomed out without restoring all transversality
/// margins; signals tolerance misconfiguration rather than geometry.
class RefinementError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Randomized sampler exhausted its tries.
class SamplingError : public std::runtime_error {
public:
    SamplingError(const std::string& what, std::vector<double> worst_sigma)
        : std::runtime_error(what), worst_sigma_(std::move(worst_sigma)) {}
    const std::vector<double>& worst_sigma_per_member() const { return worst_sigma_; }

private:
    std::vector<double> worst_sigma_;
};

/// Bounded perturbation A' with |A'| <= epsilon making A - A' invertible
/// with |(A - A')^{-1}| <= 2 / epsilon.
struct ShiftResult {
    SymmetricOperator A_prime;
    double epsilon = 0.0;
    double min_gap = 0.0; // min_i |lambda_i - g_i|
};

struct MemberRecord {
    std::size_t id = 0;
    double sigma_min = 0.0;               // of [B_member | B_candidate]
    double orthonormality_residual = 0.0; // of the member basis
    double isotropy_residual = 0.0;
};

struct EngineTrace {
    std::size_t iterations = 0; // delta halvings / sampler tries
    double final_delta = 0.0;
};

struct EngineConfig {
    double tau_transversal = kTransversalTol;
    double epsilon = 0.0; // 0 = auto: max(1, |A|_op / 2)
    double delta0 = 0.5;
    double delta_floor = 1e-12;
    std::uint64_t seed = 0;
};

/// Machine-checkable evidence that `candidate` is a common complement of
/// a family: one sigma_min per member plus the candidate's own residuals.
struct TransversalityCertificate {
    Lagrangian candidate;
    std::vector<MemberRecord> members;
    double tau_transversal = kTransversalTol;
    std::uint64_t seed = 0;
    EngineTrace trace;

    bool all_pass() const;
};

/// Eigenvalues of A inside the closed band [-eps/2, eps/2] are shifted to
/// eps, the rest to 0: A' = eps * (spectral projector onto the band).
ShiftResult spectral_shift(const SymmetricOperator& A, double epsilon);

TransversalityCertificate certify(const Lagrangian& candidate,
                                  std::span<const Lagrangian> family,
                                  const EngineConfig& config, EngineTrace trace = {});

/// Common complement for a transverse pair: chart at (L1-perp, L1),
/// decode the spectral shift of L's chart coordinate.
std::pair<Lagrangian, TransversalityCertificate>
pair_complement_transverse(const Lagrangian& L1, const Lagrangian& L,
                           const EngineConfig& config = {});

/// Common complement for an arbitrary pair, via the S + J(S) reduction:
/// the transverse construction runs on the reduced pair and the result is
/// J(S) + R. L = L' degenerates to the orthogonal complement.
std::pair<Lagrangian, TransversalityCertificate>
pair_complement_general(const Lagrangian& L, const Lagrangian& Lp,
                        const EngineConfig& config = {});

/// Perturbs `candidate` inside a chart until it is transverse to
/// `obstacle` while keeping transversality to every member of
/// `family_sofar`. The perturbation size delta is halved from delta0
/// until every margin is restored.
Lagrangian refine_against(const Lagrangian& candidate, const Lagrangian& obstacle,
                          std::span<const Lagrangian> family_sofar,
                          const EngineConfig& config = {},
                          EngineTrace* trace = nullptr);

/// Common complement of a finite family by iterated refinement, members
/// processed in input order. Deterministic given inputs and config.
TransversalityCertificate family_complement(std::span<const Lagrangian> family,
                                            const EngineConfig& config = {});

/// Streaming variant: members are pulled lazily from `next` and the
/// prefix candidate re-certified after each one.
TransversalityCertificate
stream_complement(const std::function<Lagrangian(std::size_t)>& next,
                  std::size_t prefix_length, const EngineConfig& config = {});

/// Rejection sampler used as an independent oracle for the refinement
/// pipeline: decodes random symmetric matrices in a fixed chart until all
/// transversality checks pass.
TransversalityCertificate randomized_complement(std::span<const Lagrangian> family,
                                                std::uint64_t seed,
                                                std::size_t max_tries,
                                                const EngineConfig& config = {});

} // namespace lagc
