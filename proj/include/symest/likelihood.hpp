#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "symest/bloch.hpp"
#include "symest/measurement.hpp"

namespace symest {

inline constexpr double kNegativeInfinity = -std::numeric_limits<double>::infinity();

/// One (outcome, reference) pair of the measurement sequence.
struct MeasurementRecord {
    Outcome outcome = Outcome::Symmetric;
    Qubit reference;
};

/// Ordered list of records; the data the likelihood is built from.
struct MeasurementSequence {
    std::vector<MeasurementRecord> records;

    std::size_t size() const { return records.size(); }
    bool empty() const { return records.empty(); }
    void append(Outcome outcome, const Qubit& reference) {
        records.push_back({outcome, reference});
    }
};

struct MleResult {
    Qubit estimate;
    double log_likelihood = 0.0;
};

/// Log of the outcome-probability product at `candidate`. Empty sequence
/// gives 0; any exactly-zero factor gives -infinity.
///
/// The factors are folded in ascending order of value, so the result is
/// exactly invariant under reordering of the records.
double log_likelihood(const MeasurementSequence& seq, const Qubit& candidate);

namespace detail {

/// Ascending-ordered product of probability factors, flushed to a log
/// accumulator before it can underflow. Push order is part of the contract:
/// callers stream factors smallest-first so equal multisets fold to equal
/// bits.
class AscendingLogProduct {
  public:
    void push(double p) {
        if (p <= 0.0) {
            zero_ = true;
            return;
        }
        if (p < kTinyFactor) {
            acc_ += std::log(p);
            return;
        }
        prod_ *= p;
        if (prod_ < kFlushThreshold) {
            acc_ += std::log(prod_);
            prod_ = 1.0;
        }
    }

    double value() const {
        return zero_ ? kNegativeInfinity : acc_ + std::log(prod_);
    }

  private:
    static constexpr double kFlushThreshold = 1e-250;
    static constexpr double kTinyFactor = 1e-60;

    double acc_ = 0.0;
    double prod_ = 1.0;
    bool zero_ = false;
};

/// Record with the reference pre-mapped to its Bloch vector; the form every
/// hot-path evaluation uses.
struct LikelihoodFactor {
    UnitVector3 reference;
    Outcome outcome = Outcome::Symmetric;
};

LikelihoodFactor make_factor(const MeasurementRecord& rec);
std::vector<LikelihoodFactor> make_factors(const MeasurementSequence& seq);

double factor_probability(const LikelihoodFactor& f, const UnitVector3& candidate);

/// Canonical evaluation used everywhere: probabilities sorted ascending into
/// `scratch`, then folded. `scratch` must have factors.size() capacity.
double evaluate(std::span<const LikelihoodFactor> factors, const UnitVector3& candidate,
                std::vector<double>& scratch);

/// Accept-only compass search on (theta, phi) with shrinking steps, stopping
/// below kRefineStopStep. Never returns a value below start_value.
MleResult refine_estimate(std::span<const LikelihoodFactor> factors, const Qubit& start,
                          double start_value, double initial_step);

inline constexpr double kRefineStopStep = 1e-4;

/// Step comparable to the lattice spacing of a grid with this many points.
double initial_refine_step(std::size_t grid_resolution);

}  // namespace detail

/// Per-point likelihood state over a fixed sphere grid, extended one record
/// at a time. Appending all records of a sequence reproduces, bit for bit,
/// what a fresh evaluation of that sequence yields at every grid point.
class GridLikelihood {
  public:
    GridLikelihood(const SphereGrid& grid, std::size_t reserve_records);

    void append(const MeasurementRecord& rec);

    const SphereGrid& grid() const { return *grid_; }
    std::size_t record_count() const { return count_; }

    /// Log-likelihood of the appended records at grid point i.
    double value(std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    /// Log-likelihood at point i with one additional probability factor
    /// merged in; equals append-then-value exactly.
    double value_with_extra(std::size_t i, double extra_prob) const;

    /// Index of the maximum value, ties broken by lowest index.
    std::size_t argmax() const;

  private:
    void grow();

    const SphereGrid* grid_;
    std::size_t stride_;
    std::size_t count_ = 0;
    std::vector<double> probs_;   // point-major slices, each ascending
    std::vector<double> values_;
};

/// Maximum-likelihood estimate: best grid point (lowest index on ties),
/// then local refinement. The returned log-likelihood is never below the
/// best grid value and the estimate is canonical.
/// Throws std::invalid_argument for an empty grid.
MleResult mle_estimate(const MeasurementSequence& seq, const SphereGrid& grid);

/// Same search applied to an already-populated cache; `factors` must match
/// the appended records.
MleResult mle_from_cache(const GridLikelihood& cache,
                         std::span<const detail::LikelihoodFactor> factors);

}  // namespace symest
