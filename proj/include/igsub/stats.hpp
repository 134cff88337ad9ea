#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "igsub/common.hpp"

namespace igsub {

struct MonteCarloEstimate {
    double mean = 0.0;
    double stderror = 0.0;
    std::size_t n = 0;
    std::uint64_t master_seed = 0;
    std::uint64_t stream_count = 0;
};

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double r_squared = 0.0;
};

struct KsResult {
    double d_n = 0.0;
    bool pass_at_1pct = false; // D_n < 1.6276 / sqrt(n)
};

/// Sample mean and standard error, compensated (Neumaier) summation so that
/// any evaluation schedule agrees bit-for-bit. Requires n >= 2.
MonteCarloEstimate mc_mean(std::span<const double> samples,
                           std::uint64_t master_seed = 0,
                           std::uint64_t stream_count = 0);

/// Compensated sum (exposed for the aggregation paths that need raw sums).
double neumaier_sum(std::span<const double> values);

/// One-sample Kolmogorov-Smirnov statistic against a cdf callback.
/// Input need not be sorted. Fixed 1% critical value 1.6276/sqrt(n).
KsResult ks_statistic(std::vector<double> samples,
                      const std::function<double(double)>& cdf);

/// Least squares on (log x, log y). All inputs must be positive, n >= 3.
FitResult loglog_fit(std::span<const double> xs, std::span<const double> ys);

/// Runs fn(i) for i in [0,n) across the given number of threads, contiguous
/// chunks. fn must only write to per-index slots; results are then identical
/// for any thread count.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

} // namespace igsub
