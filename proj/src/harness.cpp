#include "symest/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "symest/rng.hpp"
#include "symest/stats.hpp"

namespace symest {

void validate(const ExperimentConfig& config) {
    if (config.n_max < 1) {
        throw std::invalid_argument("config: n_max must be at least 1");
    }
    if (config.trials < 1) {
        throw std::invalid_argument("config: trials must be at least 1");
    }
    if (config.mle_grid_resolution < 2) {
        throw std::invalid_argument("config: mle grid resolution must be at least 2");
    }
    if (config.strategy == StrategyType::AdaptiveExpectedFidelity &&
        (config.adaptive_search_resolution < 2 || config.hypothetical_mle_resolution < 2)) {
        throw std::invalid_argument("config: adaptive grid resolutions must be at least 2");
    }
    for (int step : config.snapshot_steps) {
        if (step < 1 || step > config.n_max) {
            throw std::invalid_argument("config: snapshot steps must lie in [1, n_max]");
        }
    }
}

double optimal_fidelity_bound(int n) {
    return (static_cast<double>(n) + 1.0) / (static_cast<double>(n) + 2.0);
}

namespace {

TrialResult run_trial_with(const ExperimentConfig& config, int trial_index,
                           const SphereGrid& mle_grid, const StrategyKind& strategy) {
    const auto n_max = static_cast<std::size_t>(config.n_max);
    RngStream rng(config.master_seed, static_cast<std::uint64_t>(trial_index));

    TrialResult trial;
    trial.true_state = haar_random_qubit(rng);
    trial.records.records.reserve(n_max);
    trial.estimates.reserve(n_max);
    trial.fidelities.reserve(n_max);

    GridLikelihood mle_cache(mle_grid, n_max);
    std::vector<detail::LikelihoodFactor> factors;
    factors.reserve(n_max);

    const bool adaptive = strategy.tag == StrategyType::AdaptiveExpectedFidelity;
    std::optional<AdaptiveSelector> selector;
    if (adaptive) {
        selector.emplace(strategy, n_max);
    }

    for (std::size_t step = 0; step < n_max; ++step) {
        const Qubit reference = adaptive ? selector->next_reference() : next_reference_random(rng);
        const Outcome outcome = sample_outcome(trial.true_state, reference, rng);
        const MeasurementRecord rec{outcome, reference};
        trial.records.records.push_back(rec);
        mle_cache.append(rec);
        factors.push_back(detail::make_factor(rec));
        if (adaptive) {
            selector->record(rec);
        }
        const MleResult mle = mle_from_cache(mle_cache, factors);
        trial.estimates.push_back(mle.estimate);
        trial.fidelities.push_back(fidelity(mle.estimate, trial.true_state));
    }
    return trial;
}

StrategyKind make_strategy(const ExperimentConfig& config) {
    if (config.strategy == StrategyType::AdaptiveExpectedFidelity) {
        return StrategyKind::adaptive_expected_fidelity(config.adaptive_search_resolution,
                                                        config.hypothetical_mle_resolution);
    }
    return StrategyKind::random_uniform();
}

int resolve_threads(int requested, int trials) {
    int threads = requested;
    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
    }
    threads = std::max(threads, 1);
    return std::min(threads, trials);
}

}  // namespace

TrialResult run_trial(const ExperimentConfig& config, int trial_index) {
    validate(config);
    if (trial_index < 0 || trial_index >= config.trials) {
        throw std::invalid_argument("run_trial: trial index out of range");
    }
    const SphereGrid mle_grid = make_sphere_grid(config.mle_grid_resolution);
    const StrategyKind strategy = make_strategy(config);
    return run_trial_with(config, trial_index, mle_grid, strategy);
}

ExperimentResult run_experiment(const ExperimentConfig& config, int threads) {
    validate(config);
    const SphereGrid mle_grid = make_sphere_grid(config.mle_grid_resolution);
    const StrategyKind strategy = make_strategy(config);

    ExperimentResult result;
    result.trials.resize(static_cast<std::size_t>(config.trials));

    const int n_workers = resolve_threads(threads, config.trials);
    std::atomic<int> next_trial{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (;;) {
            const int index = next_trial.fetch_add(1);
            if (index >= config.trials) {
                return;
            }
            try {
                result.trials[static_cast<std::size_t>(index)] =
                    run_trial_with(config, index, mle_grid, strategy);
            } catch (...) {
                const std::scoped_lock lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                return;
            }
        }
    };
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int t = 0; t < n_workers; ++t) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    // Aggregation runs in trial order so the output never depends on the
    // worker count.
    result.curve.points.reserve(static_cast<std::size_t>(config.n_max));
    std::vector<double> per_step(result.trials.size());
    for (int n = 1; n <= config.n_max; ++n) {
        for (std::size_t t = 0; t < result.trials.size(); ++t) {
            per_step[t] = result.trials[t].fidelities[static_cast<std::size_t>(n - 1)];
        }
        const MeanStd stats = mean_std(per_step);
        result.curve.points.push_back({n, stats.mean, stats.std_error, optimal_fidelity_bound(n)});
    }
    result.snapshots.reserve(config.snapshot_steps.size());
    for (int step : config.snapshot_steps) {
        result.snapshots.push_back(rotated_snapshot(result.trials, step));
    }
    return result;
}

SnapshotDistribution rotated_snapshot(const std::vector<TrialResult>& trials, int step) {
    if (trials.empty()) {
        throw std::invalid_argument("rotated_snapshot: no trials");
    }
    if (step < 1 || static_cast<std::size_t>(step) > trials.front().estimates.size()) {
        throw std::invalid_argument("rotated_snapshot: step out of range");
    }
    const auto index = static_cast<std::size_t>(step - 1);

    SnapshotDistribution snap;
    snap.step = step;
    snap.estimates.reserve(trials.size());
    snap.references.reserve(trials.size());

    auto to_rotated = [](const Rotation& rot, const Qubit& q) {
        const UnitVector3 v = rot.apply(to_unit_vector(q));
        double phi = std::atan2(v.y, v.x);
        if (phi < 0.0) {
            phi += kTwoPi;
        }
        return RotatedPoint{std::clamp(v.z, -1.0, 1.0), phi};
    };
    auto bin_of = [](double cos_theta) {
        const auto raw = static_cast<long>((cos_theta + 1.0) * (static_cast<double>(kSnapshotBins) / 2.0));
        return static_cast<std::size_t>(std::clamp<long>(raw, 0, kSnapshotBins - 1));
    };

    std::vector<double> gaps;
    gaps.reserve(trials.size());
    for (const TrialResult& trial : trials) {
        const Rotation rot = rotation_to_north_pole(trial.true_state);
        const RotatedPoint est = to_rotated(rot, trial.estimates[index]);
        const RotatedPoint ref = to_rotated(rot, trial.records.records[index].reference);
        snap.estimates.push_back(est);
        snap.references.push_back(ref);
        snap.estimate_histogram[bin_of(est.cos_theta)] += 1;
        snap.reference_histogram[bin_of(ref.cos_theta)] += 1;
        gaps.push_back(1.0 - est.cos_theta);
    }
    snap.estimate_concentration_rate = exponential_rate(gaps);
    return snap;
}

}  // namespace symest
