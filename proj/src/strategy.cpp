#include "symest/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace symest {

namespace {

// Upper-bound slack covering fold-order rounding when pruning candidate
// grid points by their history-only likelihood.
constexpr double kPruneSlack = 1e-9;

}  // namespace

StrategyKind StrategyKind::random_uniform() {
    return {StrategyType::RandomUniform, {}, {}};
}

StrategyKind StrategyKind::adaptive_expected_fidelity(std::size_t search_resolution,
                                                      std::size_t hypothetical_resolution) {
    return {StrategyType::AdaptiveExpectedFidelity, make_sphere_grid(search_resolution),
            make_sphere_grid(hypothetical_resolution)};
}

Qubit haar_random_qubit(RngStream& rng) {
    const double c = 2.0 * rng.next_u01() - 1.0;
    const double phi = kTwoPi * rng.next_u01();
    return Qubit(std::acos(std::clamp(c, -1.0, 1.0)), phi);
}

Qubit next_reference_random(RngStream& rng) {
    return haar_random_qubit(rng);
}

double adaption_objective_value(const UnitVector3& candidate, const UnitVector3& estimate_a,
                                const UnitVector3& estimate_s) {
    const double correction = candidate.x * (estimate_s.x - estimate_a.x) +
                              candidate.y * (estimate_s.y - estimate_a.y) +
                              candidate.z * (estimate_s.z - estimate_a.z);
    return 0.5 + correction / 24.0;
}

AdaptionObjectiveValue expected_fidelity_objective(const MeasurementSequence& history,
                                                   const Qubit& candidate,
                                                   const SphereGrid& hypothetical_mle_grid) {
    MeasurementSequence with = history;
    with.append(Outcome::Antisymmetric, candidate);
    const UnitVector3 e_a = to_unit_vector(mle_estimate(with, hypothetical_mle_grid).estimate);
    with.records.back().outcome = Outcome::Symmetric;
    const UnitVector3 e_s = to_unit_vector(mle_estimate(with, hypothetical_mle_grid).estimate);
    return {adaption_objective_value(to_unit_vector(candidate), e_a, e_s), candidate};
}

AdaptiveSelector::AdaptiveSelector(const StrategyKind& strategy, std::size_t reserve_records)
    : strategy_(&strategy),
      hypothesis_cache_(strategy.hypothetical_mle_grid,
                        std::max<std::size_t>(reserve_records, 1)) {
    if (strategy.tag != StrategyType::AdaptiveExpectedFidelity) {
        throw std::invalid_argument("AdaptiveSelector: strategy is not adaptive");
    }
    const std::size_t n_candidates = strategy.adaptive_search_grid.points.size();
    candidate_qubits_.reserve(n_candidates);
    candidate_vecs_.reserve(n_candidates);
    for (const UnitVector3& point : strategy.adaptive_search_grid.points) {
        const Qubit q = from_unit_vector(point);
        candidate_qubits_.push_back(q);
        candidate_vecs_.push_back(to_unit_vector(q));
    }
    factors_.reserve(reserve_records + 1);
}

void AdaptiveSelector::record(const MeasurementRecord& rec) {
    hypothesis_cache_.append(rec);
    factors_.push_back(detail::make_factor(rec));
}

UnitVector3 AdaptiveSelector::hypothetical_estimate(Outcome outcome,
                                                    const UnitVector3& candidate_vec) {
    const SphereGrid& grid = strategy_->hypothetical_mle_grid;
    const double log_p_max = outcome == Outcome::Antisymmetric ? std::log(0.5) : 0.0;
    double best_total = kNegativeInfinity;
    std::size_t best_index = grid.points.size();
    for (const std::uint32_t index : order_) {
        const double base = hypothesis_cache_.value(index);
        if (best_index < grid.points.size() && base + log_p_max + kPruneSlack < best_total) {
            break;  // order_ descends in base value: nothing later can win
        }
        const double p = outcome == Outcome::Antisymmetric
                             ? p_antisymmetric(grid.points[index], candidate_vec)
                             : p_symmetric(grid.points[index], candidate_vec);
        const double total = hypothesis_cache_.value_with_extra(index, p);
        if (total > best_total || (total == best_total && index < best_index)) {
            best_total = total;
            best_index = index;
        }
    }
    const Qubit start = from_unit_vector(grid.points[best_index]);
    if (best_total == kNegativeInfinity) {
        return to_unit_vector(start);
    }
    factors_.back() = {candidate_vec, outcome};
    const MleResult refined =
        detail::refine_estimate(factors_, start, best_total,
                                detail::initial_refine_step(grid.resolution()));
    return to_unit_vector(refined.estimate);
}

Qubit AdaptiveSelector::next_reference() {
    if (factors_.empty()) {
        return Qubit(0.0, 0.0);
    }
    const std::size_t n_grid = strategy_->hypothetical_mle_grid.points.size();
    order_.resize(n_grid);
    std::iota(order_.begin(), order_.end(), 0u);
    const std::vector<double>& base = hypothesis_cache_.values();
    std::sort(order_.begin(), order_.end(), [&base](std::uint32_t a, std::uint32_t b) {
        if (base[a] != base[b]) {
            return base[a] > base[b];
        }
        return a < b;
    });

    factors_.push_back({});  // hypothetical slot
    double best_value = kNegativeInfinity;
    std::size_t best_candidate = 0;
    for (std::size_t c = 0; c < candidate_vecs_.size(); ++c) {
        const UnitVector3 e_a = hypothetical_estimate(Outcome::Antisymmetric, candidate_vecs_[c]);
        const UnitVector3 e_s = hypothetical_estimate(Outcome::Symmetric, candidate_vecs_[c]);
        const double value = adaption_objective_value(candidate_vecs_[c], e_a, e_s);
        if (value > best_value) {
            best_value = value;
            best_candidate = c;
        }
    }
    factors_.pop_back();
    return candidate_qubits_[best_candidate];
}

Qubit next_reference_adaptive(const MeasurementSequence& history, const StrategyKind& strategy) {
    if (strategy.tag != StrategyType::AdaptiveExpectedFidelity) {
        throw std::invalid_argument("next_reference_adaptive: strategy is not adaptive");
    }
    if (history.empty()) {
        return Qubit(0.0, 0.0);
    }
    AdaptiveSelector selector(strategy, history.size() + 1);
    for (const MeasurementRecord& rec : history.records) {
        selector.record(rec);
    }
    return selector.next_reference();
}

}  // namespace symest
