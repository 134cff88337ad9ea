#pragma once

#include <cstdint>
#include <vector>

#include "igsub/common.hpp"
#include "igsub/rng.hpp"
#include "igsub/stats.hpp"

namespace igsub {

struct FbmPath {
    std::vector<double> times;
    std::vector<double> values;
};

/// Time-changed fBm sample Z_H(t) = B_H(S_alpha(t)) read at eval_times,
/// together with the clock values it was driven by.
struct TimeChangedFbmPath {
    std::vector<double> eval_times;
    std::vector<double> clock;
    std::vector<double> values;
};

struct ExponentFit {
    double slope = 0.0;       // fitted exponent (variance) or decay rate d (LRD)
    double slope_stderr = 0.0;
    double prefactor = 0.0;   // exp(intercept) of the log-log fit
    FitResult fit;
    std::vector<double> abscissae; // t values used in the regression
    std::vector<double> ordinates; // fitted quantity per t
    bool inconclusive = false;     // stderr too large to resolve the exponent
};

/// Exact joint Gaussian sample of fBm at the given strictly increasing
/// nonnegative times via dense Cholesky factorization of
/// cov(s,t) = (s^{2H} + t^{2H} - |t-s|^{2H})/2. Times at 0 map to exact
/// zeros. Throws on near-duplicate times (factorization loses positivity).
FbmPath sample_fbm_at(double hurst, const std::vector<double>& times, RngStream& rng);

/// E|B_H(t)|^q = sqrt(2^q/pi) Gamma((q+1)/2) t^{qH}, q > -1.
double fbm_abs_moment(double hurst, double q, double t);

/// Draws a plain subordinator clock on [0, horizon], reads it at eval_times,
/// then samples the fBm jointly at the resulting (deduplicated) clock values.
/// Clock and Gaussian draws come from separate streams so the two processes
/// are independent.
TimeChangedFbmPath sample_time_changed_fbm(double hurst, double alpha, double horizon,
                                           const std::vector<double>& eval_times,
                                           RngStream& clock_rng, RngStream& gauss_rng);

/// Log-log slope of the Monte Carlo variance of Z_H(t) over the largest
/// decade of t_grid; the subdiffusion exponent 2H/alpha in the regime of the
/// time-change theorem.
ExponentFit estimate_variance_exponent(double hurst, double alpha,
                                       const std::vector<double>& t_grid,
                                       std::size_t n_paths, std::uint64_t master_seed,
                                       int threads = 1);

/// Fits Corr(Z_H(t), Z_H(s)) ~ c(s) t^{-d} over the largest decade of t_grid
/// and returns d. Refuses H >= 1/2 or alpha < 2H (outside the validity
/// regime) with a regime_error.
ExponentFit estimate_lrd_exponent(double hurst, double alpha, double s,
                                  const std::vector<double>& t_grid, std::size_t n_paths,
                                  std::uint64_t master_seed, int threads = 1);

} // namespace igsub
