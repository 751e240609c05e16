#pragma once

#include <cstddef>
#include <span>

namespace symest {

struct MeanStd {
    double mean = 0.0;
    double stddev = 0.0;      // sample standard deviation (n - 1)
    double std_error = 0.0;   // stddev / sqrt(n)
    std::size_t n = 0;
};

MeanStd mean_std(std::span<const double> samples);

/// Kolmogorov-Smirnov statistic of the samples against the uniform
/// distribution on [lo, hi].
double ks_statistic_uniform(std::span<const double> samples, double lo, double hi);

/// Critical value K with Q(K) = alpha for the asymptotic Kolmogorov
/// distribution; the test rejects when sqrt(n) * D > K.
double ks_critical_value(double alpha);

bool ks_uniform_pass(std::span<const double> samples, double lo, double hi, double alpha);

/// Rate of the exponential law fitted to nonnegative samples by maximum
/// likelihood, 1 / mean. Infinite when all samples are zero.
double exponential_rate(std::span<const double> samples);

}  // namespace symest
