#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "igsub/common.hpp"
#include "igsub/rng.hpp"
#include "igsub/specfun.hpp"
#include "igsub/subordinator.hpp"

namespace igsub {

/// Characteristic exponent psi of the outer Levy process X plus its triplet
/// (a, b, nu). nu_density may be empty for processes without jumps (Brownian
/// motion, pure drift).
struct LevySymbolDescriptor {
    std::function<std::complex<double>(double)> psi;
    double a = 0.0;
    double b = 0.0;
    std::function<double(double)> nu_density;

    static LevySymbolDescriptor brownian();   // triplet (0,1,0), psi(u) = -u^2/2
    static LevySymbolDescriptor pure_drift(double c); // X(t) = c t
};

/// Triplet of the subordinated process; nu_density evaluates the Levy
/// density by quadrature.
struct SubordinatedTriplet {
    double a = 0.0;
    double b = 0.0;
    std::function<double(double)> nu_density;
};

/// Path of Z(t) = X(beta0 t + S(t)) on a time grid.
struct TimeChangedPath {
    std::vector<double> time_grid;
    std::vector<double> inner_clock;
    std::vector<double> outer_values;
};

/// Levy symbol of Z(t) = X(beta0 t + S(t)) for the floor-1 families:
///   psi_Z(u) = alpha gamma(alpha;theta) - alpha gamma(alpha;theta - psi_X(u))
///              + beta0 psi_X(u).
/// Real arguments use the real incomplete-gamma pair; complex arguments the
/// series within its radius and a straight-line quadrature beyond.
std::function<std::complex<double>(double)> subordinate_symbol(
    const LevySymbolDescriptor& x_symbol, const SubordinatorSpec& spec);

/// Triplet transform under the time change:
///   a' = beta0 a,
///   b' = beta0 b + int pi_theta(dz) int_{|x|<=1} x mu_z(dx),
///   nu'(x) = beta0 nu(x) + int mu_z(x) pi_theta(dz),
/// with mu_z supplied as a density callback (z, x) -> density of X(z).
SubordinatedTriplet subordinate_triplet(const LevySymbolDescriptor& x_triplet,
                                        const SubordinatorSpec& spec,
                                        const std::function<double(double, double)>& mu_z);

/// Levy density of the subordinated Brownian motion. theta = 0 uses the
/// closed form sqrt(2) alpha Gamma(alpha+1/2)/pi * 1F1(alpha+1/2; 3/2; -x^2/2);
/// theta > 0 integrates the defining mixture directly.
double bm_levy_density(double x, double alpha, double theta);

/// Exact-in-law sample of Z(t) = B(beta0 t + S(t)) on the given grid: the
/// inner clock is a subordinator path, outer increments are Gaussian with
/// variance equal to the clock increments.
TimeChangedPath sample_subordinated_bm(const SubordinatorSpec& spec,
                                       const std::vector<double>& time_grid, RngStream& rng);

/// Autocovariance beta0 (t ^ tau) + (t ^ tau) alpha theta^{alpha-1} e^{-theta};
/// infinite for theta = 0 with alpha < 1.
double bm_autocovariance(const SubordinatorSpec& spec, double t, double tau);

/// Phillips-form approximation of -(-A)^alpha g at x:
///   int_eps^infty (T_s g(x) - g(x)) alpha (s-eps)^{-alpha} s^{-1}/Gamma(1-alpha) ds,
/// with the semigroup supplied as (s, x) -> (T_s g)(x). With the shift
/// semigroup this is exactly the truncated Marchaud derivative.
double phillips_apply(const std::function<double(double)>& g, double alpha, double epsilon,
                      const std::function<double(double, double)>& semigroup, double x,
                      const QuadOptions& opt = {});

} // namespace igsub
