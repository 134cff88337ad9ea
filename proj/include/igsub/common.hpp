#pragma once

#include <stdexcept>
#include <string>

namespace igsub {

/// Thrown when an iterative scheme (series, continued fraction, adaptive
/// quadrature, rejection sampler) exhausts its budget. Carries the last
/// error estimate so callers can decide whether the partial result is usable.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double last_estimate)
        : std::runtime_error(what), last_estimate_(last_estimate) {}
    double last_estimate() const noexcept { return last_estimate_; }

private:
    double last_estimate_;
};

/// Thrown when a requested moment or covariance is infinite for the given
/// parameters (e.g. integer moments of the non-tempered subordinator).
class infinite_moment_error : public std::domain_error {
    using std::domain_error::domain_error;
};

/// Thrown when an estimator is invoked outside the regime in which the
/// asymptotic result it targets is valid (e.g. LRD fits with H >= 1/2).
class regime_error : public std::domain_error {
    using std::domain_error::domain_error;
};

/// Tolerance and budget knobs for series and quadrature.
struct Accuracy {
    double rel_tol = 1e-12;
    int max_terms = 100000;
    int max_subdivisions = 20000;
};

} // namespace igsub
