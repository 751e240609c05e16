#pragma once

#include <cstddef>
#include <vector>

#include "symest/bloch.hpp"
#include "symest/likelihood.hpp"
#include "symest/rng.hpp"

namespace symest {

enum class StrategyType {
    RandomUniform,
    AdaptiveExpectedFidelity,
};

/// Reference-selection policy. The adaptive policy carries its two grids:
/// the candidate search grid and the coarser grid used for the hypothetical
/// estimates inside the lookahead objective.
struct StrategyKind {
    StrategyType tag = StrategyType::RandomUniform;
    SphereGrid adaptive_search_grid;
    SphereGrid hypothetical_mle_grid;

    static StrategyKind random_uniform();
    static StrategyKind adaptive_expected_fidelity(std::size_t search_resolution = 512,
                                                   std::size_t hypothetical_resolution = 256);
};

/// Haar-uniform pure qubit: cos(theta) uniform in [-1, 1], phi uniform in
/// [0, 2pi). Consumes exactly two draws.
Qubit haar_random_qubit(RngStream& rng);

/// The baseline policy: every reference, including the first, is drawn
/// uniformly from the sphere.
Qubit next_reference_random(RngStream& rng);

struct AdaptionObjectiveValue {
    double value = 0.0;
    Qubit candidate;
};

/// One-step-lookahead score of a candidate reference: the sphere average of
/// p_a * F(est_a, psi) + p_s * F(est_s, psi), where est_a / est_s are the
/// maximum-likelihood estimates the history would yield after an a / s
/// outcome on the candidate. The average reduces in closed form to
///
///     1/2 + n_candidate . (e_s - e_a) / 24
///
/// with e_a, e_s the Bloch vectors of the two hypothetical estimates
/// (computed on hypothetical_mle_grid). Always in [1/2 - 1/12, 1/2 + 1/12].
AdaptionObjectiveValue expected_fidelity_objective(const MeasurementSequence& history,
                                                   const Qubit& candidate,
                                                   const SphereGrid& hypothetical_mle_grid);

/// The closed-form score from the candidate direction and the two
/// hypothetical estimate vectors. Shared by every code path so all routes
/// round identically.
double adaption_objective_value(const UnitVector3& candidate, const UnitVector3& estimate_a,
                                const UnitVector3& estimate_s);

/// Adaptive reference choice: |0> for an empty history, otherwise the
/// search-grid candidate maximizing the lookahead objective (ties broken by
/// lowest grid index). A pure function of the history and the grids.
Qubit next_reference_adaptive(const MeasurementSequence& history, const StrategyKind& strategy);

/// Incremental form of next_reference_adaptive for use inside a trial loop.
/// Feeding records one at a time and asking for the next reference gives
/// exactly the same choices as the stateless function; the per-candidate
/// hypothetical solves reuse the accumulated per-grid-point state instead of
/// refolding the whole history.
class AdaptiveSelector {
  public:
    explicit AdaptiveSelector(const StrategyKind& strategy, std::size_t reserve_records = 32);

    void record(const MeasurementRecord& rec);
    Qubit next_reference();

  private:
    UnitVector3 hypothetical_estimate(Outcome outcome, const UnitVector3& candidate_vec);

    const StrategyKind* strategy_;
    std::vector<Qubit> candidate_qubits_;
    std::vector<UnitVector3> candidate_vecs_;
    GridLikelihood hypothesis_cache_;
    std::vector<detail::LikelihoodFactor> factors_;  // history + one hypothetical slot
    std::vector<std::uint32_t> order_;               // hyp grid sorted by value desc, index asc
};

}  // namespace symest
