#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "igsub/common.hpp"

namespace igsub {

/// Complete gamma function. Throws std::domain_error at the poles
/// a in {0, -1, -2, ...}.
double gamma_complete(double a);

/// Lower incomplete gamma gamma(a,x) = int_0^x e^{-w} w^{a-1} dw, a > 0, x >= 0.
/// Unregularized. Series for x < a+1, complement of the continued fraction
/// otherwise.
double lower_inc_gamma(double a, double x, const Accuracy& acc = {});

/// Upper incomplete gamma Gamma(a,x) = int_x^infty e^{-w} w^{a-1} dw.
/// Defined for any real a with x > 0; for a > 0 also at x = 0 where it
/// equals Gamma(a). Negative a is reached by downward recurrence
/// Gamma(a,x) = (Gamma(a+1,x) - x^a e^{-x})/a from a lifted positive order,
/// or directly by the continued fraction when x is large enough for it to be
/// stable.
double upper_inc_gamma(double a, double x, const Accuracy& acc = {});

/// Regularized incomplete beta I_x(a,b), x in [0,1], a,b > 0.
double reg_inc_beta(double x, double a, double b, const Accuracy& acc = {});

/// Kummer confluent hypergeometric 1F1(a;c;z). For z < 0 the series is
/// evaluated through the Kummer transform 1F1(a;c;z) = e^z 1F1(c-a;c;-z),
/// which keeps the terms positive in the regimes used here.
double kummer_1f1(double a, double c, double z, const Accuracy& acc = {});

/// Three-parameter Mittag-Leffler function
///   E^gamma_{alpha,beta}(z) = sum_k (gamma)_k z^k / (k! Gamma(alpha k + beta)),
/// alpha > 0, with (gamma)_k the Pochhammer rising factorial. Summed in
/// extended precision; alternating arguments of moderate size are fine.
double mittag_leffler3(double alpha, double beta, double gamma, double z,
                       const Accuracy& acc = {});

/// Lower incomplete gamma with complex second argument via the series
///   gamma(a,z) = z^a sum_k (-z)^k / (k! (a+k)),
/// principal branch of z^a. Restricted to |z| <= 30 where the alternating
/// series is stable in extended precision; throws convergence_error beyond.
std::complex<double> lower_inc_gamma_c(double a, std::complex<double> z,
                                       const Accuracy& acc = {});

/// Adaptive Gauss-Kronrod (G7,K15) quadrature options.
///
/// Endpoint singularities of power type must be declared: lo_power = p means
/// the integrand behaves like (x-lo)^p, p in (-1,0), near lo and is removed
/// by the substitution x = lo + u^{1/(1+p)}. For finite hi, hi_power is the
/// analogous exponent at the upper end. For hi = +infinity, hi_power = -q
/// declares an algebraic tail f ~ x^{-q}; exponentially decaying tails need
/// no hint.
struct QuadOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-300;
    int max_subdivisions = 20000;
    std::optional<double> lo_power;
    std::optional<double> hi_power;
};

/// Integrates f over (lo, hi); hi may be +infinity. Relative accuracy
/// rel_tol is targeted; throws convergence_error (carrying the last error
/// estimate) when the subdivision budget is exhausted first.
double quad_adaptive(const std::function<double(double)>& f, double lo, double hi,
                     const QuadOptions& opt = {});

} // namespace igsub
