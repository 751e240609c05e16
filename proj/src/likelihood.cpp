#include "symest/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symest {

namespace detail {

LikelihoodFactor make_factor(const MeasurementRecord& rec) {
    return {to_unit_vector(rec.reference), rec.outcome};
}

std::vector<LikelihoodFactor> make_factors(const MeasurementSequence& seq) {
    std::vector<LikelihoodFactor> factors;
    factors.reserve(seq.size());
    for (const MeasurementRecord& rec : seq.records) {
        factors.push_back(make_factor(rec));
    }
    return factors;
}

double factor_probability(const LikelihoodFactor& f, const UnitVector3& candidate) {
    return f.outcome == Outcome::Antisymmetric ? p_antisymmetric(candidate, f.reference)
                                               : p_symmetric(candidate, f.reference);
}

double evaluate(std::span<const LikelihoodFactor> factors, const UnitVector3& candidate,
                std::vector<double>& scratch) {
    scratch.resize(factors.size());
    for (std::size_t k = 0; k < factors.size(); ++k) {
        scratch[k] = factor_probability(factors[k], candidate);
    }
    std::sort(scratch.begin(), scratch.end());
    AscendingLogProduct fold;
    for (double p : scratch) {
        fold.push(p);
    }
    return fold.value();
}

double initial_refine_step(std::size_t grid_resolution) {
    return std::sqrt(4.0 * kPi / static_cast<double>(grid_resolution));
}

MleResult refine_estimate(std::span<const LikelihoodFactor> factors, const Qubit& start,
                          double start_value, double initial_step) {
    std::vector<double> scratch(factors.size());
    double theta = start.theta();
    double phi = start.phi();
    double best = start_value;
    double step = initial_step;
    while (step >= kRefineStopStep) {
        double move_theta = theta;
        double move_phi = phi;
        double move_value = best;
        const double probes[4][2] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
        for (const auto& d : probes) {
            const Qubit q(theta + d[0], phi + d[1]);
            const double v = evaluate(factors, to_unit_vector(q), scratch);
            if (v > move_value) {
                move_value = v;
                move_theta = q.theta();
                move_phi = q.phi();
            }
        }
        if (move_value > best) {
            best = move_value;
            theta = move_theta;
            phi = move_phi;
        } else {
            step *= 0.5;
        }
    }
    return {Qubit(theta, phi), best};
}

}  // namespace detail

double log_likelihood(const MeasurementSequence& seq, const Qubit& candidate) {
    const std::vector<detail::LikelihoodFactor> factors = detail::make_factors(seq);
    std::vector<double> scratch(factors.size());
    return detail::evaluate(factors, to_unit_vector(candidate), scratch);
}

GridLikelihood::GridLikelihood(const SphereGrid& grid, std::size_t reserve_records)
    : grid_(&grid), stride_(std::max<std::size_t>(reserve_records, 1)) {
    if (grid.points.empty()) {
        throw std::invalid_argument("GridLikelihood: empty grid");
    }
    probs_.resize(grid.points.size() * stride_);
    values_.assign(grid.points.size(), 0.0);
}

void GridLikelihood::grow() {
    const std::size_t new_stride = stride_ * 2;
    std::vector<double> next(grid_->points.size() * new_stride);
    for (std::size_t i = 0; i < grid_->points.size(); ++i) {
        std::copy_n(probs_.begin() + static_cast<std::ptrdiff_t>(i * stride_), count_,
                    next.begin() + static_cast<std::ptrdiff_t>(i * new_stride));
    }
    probs_ = std::move(next);
    stride_ = new_stride;
}

void GridLikelihood::append(const MeasurementRecord& rec) {
    if (count_ == stride_) {
        grow();
    }
    const detail::LikelihoodFactor factor = detail::make_factor(rec);
    const std::size_t n_points = grid_->points.size();
    for (std::size_t i = 0; i < n_points; ++i) {
        const double p = detail::factor_probability(factor, grid_->points[i]);
        double* slice = probs_.data() + i * stride_;
        std::size_t pos = count_;
        while (pos > 0 && slice[pos - 1] > p) {
            slice[pos] = slice[pos - 1];
            --pos;
        }
        slice[pos] = p;
        detail::AscendingLogProduct fold;
        for (std::size_t k = 0; k <= count_; ++k) {
            fold.push(slice[k]);
        }
        values_[i] = fold.value();
    }
    ++count_;
}

double GridLikelihood::value_with_extra(std::size_t i, double extra_prob) const {
    const double* slice = probs_.data() + i * stride_;
    detail::AscendingLogProduct fold;
    std::size_t k = 0;
    while (k < count_ && slice[k] < extra_prob) {
        fold.push(slice[k]);
        ++k;
    }
    fold.push(extra_prob);
    while (k < count_) {
        fold.push(slice[k]);
        ++k;
    }
    return fold.value();
}

std::size_t GridLikelihood::argmax() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < values_.size(); ++i) {
        if (values_[i] > values_[best]) {
            best = i;
        }
    }
    return best;
}

MleResult mle_from_cache(const GridLikelihood& cache,
                         std::span<const detail::LikelihoodFactor> factors) {
    const std::size_t best = cache.argmax();
    const double best_value = cache.value(best);
    const Qubit start = from_unit_vector(cache.grid().points[best]);
    if (best_value == kNegativeInfinity) {
        return {start, kNegativeInfinity};
    }
    return detail::refine_estimate(factors, start, best_value,
                                   detail::initial_refine_step(cache.grid().resolution()));
}

MleResult mle_estimate(const MeasurementSequence& seq, const SphereGrid& grid) {
    if (grid.points.empty()) {
        throw std::invalid_argument("mle_estimate: empty grid");
    }
    GridLikelihood cache(grid, std::max<std::size_t>(seq.size(), 1));
    for (const MeasurementRecord& rec : seq.records) {
        cache.append(rec);
    }
    const std::vector<detail::LikelihoodFactor> factors = detail::make_factors(seq);
    return mle_from_cache(cache, factors);
}

}  // namespace symest
