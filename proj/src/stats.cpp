#include "symest/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace symest {

MeanStd mean_std(std::span<const double> samples) {
    MeanStd out;
    out.n = samples.size();
    if (samples.empty()) {
        return out;
    }
    double sum = 0.0;
    for (double x : samples) {
        sum += x;
    }
    out.mean = sum / static_cast<double>(samples.size());
    if (samples.size() < 2) {
        return out;
    }
    double sq = 0.0;
    for (double x : samples) {
        const double d = x - out.mean;
        sq += d * d;
    }
    out.stddev = std::sqrt(sq / static_cast<double>(samples.size() - 1));
    out.std_error = out.stddev / std::sqrt(static_cast<double>(samples.size()));
    return out;
}

double ks_statistic_uniform(std::span<const double> samples, double lo, double hi) {
    if (samples.empty() || !(hi > lo)) {
        throw std::invalid_argument("ks_statistic_uniform: need samples and hi > lo");
    }
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double cdf = std::clamp((sorted[i] - lo) / (hi - lo), 0.0, 1.0);
        d = std::max(d, cdf - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - cdf);
    }
    return d;
}

namespace {

// Survival function of the Kolmogorov distribution.
double kolmogorov_q(double x) {
    if (x <= 0.0) {
        return 1.0;
    }
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * static_cast<double>(k) * static_cast<double>(k) * x * x);
        sum += (k % 2 == 1) ? term : -term;
        if (term < 1e-14) {
            break;
        }
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

double ks_critical_value(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw std::invalid_argument("ks_critical_value: alpha must be in (0, 1)");
    }
    double lo = 1e-3;
    double hi = 5.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (kolmogorov_q(mid) > alpha) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

bool ks_uniform_pass(std::span<const double> samples, double lo, double hi, double alpha) {
    const double d = ks_statistic_uniform(samples, lo, hi);
    const double n = static_cast<double>(samples.size());
    return std::sqrt(n) * d <= ks_critical_value(alpha);
}

double exponential_rate(std::span<const double> samples) {
    if (samples.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (double x : samples) {
        sum += x;
    }
    const double mean = sum / static_cast<double>(samples.size());
    return mean > 0.0 ? 1.0 / mean : std::numeric_limits<double>::infinity();
}

}  // namespace symest
