#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "igsub/common.hpp"
#include "igsub/specfun.hpp"

namespace igsub {

/// A function known on a strictly increasing grid, optionally backed by
/// analytic value/derivative callbacks. Evaluation is 0 to the left of the
/// grid (consistent with densities supported on [0,infinity)) and a domain
/// error to the right. Without callbacks, values are interpolated with a
/// 4-point Lagrange stencil and derivatives come from Richardson-extrapolated
/// central differences.
///
/// origin_power, when set, declares that the derivative behaves like
/// c*(x - grid.front())^origin_power at the left edge; the convolution
/// operators use it to stretch out the endpoint singularity.
struct GridFunction {
    std::vector<double> grid;
    std::vector<double> values;
    std::function<double(double)> fn;   // optional analytic values
    std::function<double(double)> dfn;  // optional analytic derivative
    std::optional<double> origin_power;

    static GridFunction from_samples(std::vector<double> grid, std::vector<double> values);
    static GridFunction from_function(const std::function<double(double)>& f, double lo,
                                      double hi, std::size_t n,
                                      std::function<double(double)> deriv = {});

    double eval(double x) const;
    double deriv(double x) const;
    void validate() const;
};

struct OperatorParams {
    double rho;         // fractional order in (0,1)
    double lambda_rate; // tempering rate > 0
    double alpha = 0.5;
    double epsilon = 1.0;
};

/// Riemann-Liouville derivative of order alpha in (0,1]:
///   (1/Gamma(1-alpha)) d/dx int_0^x f(t) (x-t)^{-alpha} dt,
/// ordinary derivative at alpha = 1. The Abel integral is computed by exact
/// product integration of the piecewise-linear interpolant on the grid, then
/// differenced with Richardson extrapolation at the local grid spacing.
/// err_est, when given, receives the differencing self-estimate so callers
/// can detect too-coarse grids.
double rl_derivative(const GridFunction& f, double alpha, double x,
                     double* err_est = nullptr);

/// The scalar transfer factor O_eps(eta) = (alpha/eps^alpha)
/// int_0^eps e^{-eta y} y^{alpha-1} dy in (0,1]; equals
/// (alpha/(eta*eps)^alpha) gamma(alpha, eta*eps) for eta > 0 and 1 at eta = 0.
double o_epsilon_transfer(double eta, double epsilon, double alpha);

/// The mollifier (alpha/eps^alpha) int_0^eps h(x-y) y^{alpha-1} dy; tends to
/// h(x) as eps -> 0.
double o_epsilon_apply(const GridFunction& h, double epsilon, double alpha, double x,
                       const QuadOptions& opt = {});

/// Caputo-type derivative with tempered kernel:
///   (rho lambda^rho / Gamma(1-rho)) int_0^t u'(t-s) Gamma(-rho; lambda s) ds.
double tempered_caputo(const GridFunction& u, const OperatorParams& params, double t,
                       const QuadOptions& opt = {});

/// Residual of the relaxation equation satisfied by u = gamma(alpha, .):
///   r(x) = (alpha/Gamma(1-alpha)) int_0^x u'(x-s) Gamma(-alpha,s) ds
///          - (Gamma(alpha) - u(x)),
/// returned on the given grid (x > 0 only; the equation is not pointwise
/// meaningful at x = 0).
GridFunction relaxation_residual(double alpha, const std::vector<double>& x_grid);

struct GoverningCheckRow {
    double eta;
    double mc_mean;
    double mc_stderr;
    double target; // e^{-eta^alpha O_eps(eta) t}
    bool pass;     // |mc_mean - target| <= 4 stderr
};

struct GoverningCheckReport {
    double alpha, epsilon, t;
    std::size_t n_paths;
    std::uint64_t master_seed;
    std::vector<GoverningCheckRow> rows;
    bool all_pass() const;
};

/// Laplace-domain statement of the governing equation of the floor-epsilon
/// density: the empirical transform of S_alpha^(eps)(t) against
/// e^{-eta^alpha O_eps(eta) t} for each eta in the grid.
GoverningCheckReport governing_check_eps(double alpha, double epsilon, double t,
                                         const std::vector<double>& eta_grid,
                                         std::size_t n_paths, std::uint64_t master_seed,
                                         int threads = 1);

/// Truncated Marchaud-type derivative
///   int_eps^infty (g(x-s) - g(x)) alpha (s-eps)^{-alpha} s^{-1} / Gamma(1-alpha) ds.
double marchaud_approx(const std::function<double(double)>& g, double alpha, double epsilon,
                       double x, const QuadOptions& opt = {});

} // namespace igsub
