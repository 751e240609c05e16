#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "symest/bloch.hpp"
#include "symest/likelihood.hpp"
#include "symest/strategy.hpp"

namespace symest {

inline constexpr std::size_t kSnapshotBins = 40;

struct ExperimentConfig {
    int n_max = 20;                                  // copies per trial
    int trials = 10000;                              // Monte Carlo runs
    StrategyType strategy = StrategyType::AdaptiveExpectedFidelity;
    std::uint64_t master_seed = 42;
    std::size_t mle_grid_resolution = 1024;
    std::size_t adaptive_search_resolution = 512;
    std::size_t hypothetical_mle_resolution = 256;
    std::vector<int> snapshot_steps = {1, 5, 20};
};

/// Throws std::invalid_argument when a field violates its contract
/// (n_max < 1, trials < 1, grid resolution < 2, snapshot step outside
/// [1, n_max]).
void validate(const ExperimentConfig& config);

/// Everything one simulated run produces: the hidden true state, the
/// recorded sequence, and the running estimates with their fidelities.
struct TrialResult {
    Qubit true_state;
    MeasurementSequence records;
    std::vector<Qubit> estimates;
    std::vector<double> fidelities;
};

struct FidelityPoint {
    int n = 0;
    double mean_fidelity = 0.0;
    double std_error = 0.0;
    double optimal_bound = 0.0;  // (n + 1) / (n + 2)
};

struct FidelityCurve {
    std::vector<FidelityPoint> points;
};

/// Mean fidelity achievable by collective measurements on n copies; used as
/// the reference upper curve, not as a simulated scheme.
double optimal_fidelity_bound(int n);

struct RotatedPoint {
    double cos_theta = 0.0;
    double phi = 0.0;
};

/// Per-step distributions in the frame where each trial's true state sits at
/// the north pole, plus fixed-bin histograms of cos(theta).
struct SnapshotDistribution {
    int step = 0;
    std::vector<RotatedPoint> estimates;
    std::vector<RotatedPoint> references;
    std::array<std::int64_t, kSnapshotBins> estimate_histogram{};
    std::array<std::int64_t, kSnapshotBins> reference_histogram{};
    /// Exponential-law rate fitted to 1 - cos(theta) of the estimates; a
    /// diagnostic of how sharply they concentrate at the pole.
    double estimate_concentration_rate = 0.0;

    static double bin_left(std::size_t k) {
        return -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(kSnapshotBins);
    }
    static double bin_right(std::size_t k) { return bin_left(k + 1); }
};

struct ExperimentResult {
    FidelityCurve curve;
    std::vector<SnapshotDistribution> snapshots;
    std::vector<TrialResult> trials;
};

/// One full simulated run: Haar-random true state from the (master_seed,
/// trial_index) stream, then n_max rounds of reference choice, sampled
/// outcome, and maximum-likelihood estimation. Deterministic in its inputs.
TrialResult run_trial(const ExperimentConfig& config, int trial_index);

/// All trials plus aggregation. Trials execute on `threads` workers
/// (0 = number of hardware threads) and the result is independent of the
/// worker count.
ExperimentResult run_experiment(const ExperimentConfig& config, int threads = 0);

/// Rotated-frame distribution of the estimates and references at `step`
/// (1-based). Throws std::invalid_argument when the step is out of range.
SnapshotDistribution rotated_snapshot(const std::vector<TrialResult>& trials, int step);

}  // namespace symest
