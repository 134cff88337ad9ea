#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "igsub/common.hpp"
#include "igsub/rng.hpp"

namespace igsub {

enum class Family { plain, tempered, eps_floor };

/// Parameter record for the three subordinator families:
///   plain      jumps >= 1, Laplace exponent alpha*gamma(alpha; eta)
///   tempered   jumps >= 1 damped by e^{-theta z}
///   eps_floor  jumps >= epsilon, the floor-epsilon approximation family
/// beta0 is a deterministic drift added at subordination time. Tempering and
/// the epsilon floor are mutually exclusive (tempering is only defined for
/// floor 1).
struct SubordinatorSpec {
    double alpha = 0.5;
    double theta = 0.0;
    std::optional<double> epsilon;
    double beta0 = 0.0;

    static SubordinatorSpec plain(double alpha, double beta0 = 0.0);
    static SubordinatorSpec tempered(double alpha, double theta, double beta0 = 0.0);
    static SubordinatorSpec eps_floor(double alpha, double epsilon, double beta0 = 0.0);

    Family family() const;
    double jump_floor() const { return epsilon.value_or(1.0); }
    void validate() const;
};

/// One compound-Poisson trajectory. jump_times are strictly sorted,
/// cumulative[i] is the running jump mass through jump i.
struct PathSample {
    double horizon = 0.0;
    std::vector<double> jump_times;
    std::vector<double> jump_sizes;
    std::vector<double> cumulative;
    double drift = 0.0;

    std::size_t jump_count() const { return jump_times.size(); }
    double total_jump_mass() const { return cumulative.empty() ? 0.0 : cumulative.back(); }
};

/// Discrete direction measure on the quarter circle: atoms at the given
/// angles (radians in [0, pi/2]) with weights summing to 1. scale_C scales
/// the radial intensity relative to the normalized univariate floor-epsilon
/// Levy measure.
struct DirectionMeasure2D {
    std::vector<double> angles;
    std::vector<double> weights;
    double scale_C = 1.0;

    void validate() const;
};

struct MvPathSample {
    double horizon = 0.0;
    std::vector<double> jump_times;
    std::vector<std::array<double, 2>> jump_vectors;
};

/// Laplace exponent of beta0*t + S(t): beta0*eta plus the family exponent
///   plain:     alpha * gamma(alpha; eta)
///   tempered:  alpha * [gamma(alpha; eta+theta) - gamma(alpha; theta)]
///   eps_floor: (alpha / eps^alpha) * gamma(alpha; eta*eps)
double laplace_exponent(const SubordinatorSpec& spec, double eta);

/// Total Levy mass: alpha*Gamma(alpha), alpha*Gamma(alpha;theta), or
/// alpha*Gamma(alpha)*eps^{-alpha}.
double poisson_rate(const SubordinatorSpec& spec);

/// Density of the Levy measure at z. Zero below the jump floor, +infinity
/// exactly at the floor (integrable edge); callers integrate across it.
double levy_density(const SubordinatorSpec& spec, double z);

/// One jump. Exact Beta change of variables Z = floor/(1-U), U ~ Beta(1-a,a),
/// for the plain and floor-epsilon families; tempered jumps by rejection with
/// the plain proposal and acceptance e^{-theta(Z-1)}. At alpha = 1 the jump
/// is deterministically the floor value.
double sample_jump(const SubordinatorSpec& spec, RngStream& rng);

/// Compound-Poisson path on [0, horizon]: N ~ Poisson(rate*horizon) jumps at
/// sorted uniform epochs.
PathSample sample_path(const SubordinatorSpec& spec, double horizon, RngStream& rng);

/// Terminal value beta0*t + sum of jumps only (no epochs drawn); same law as
/// evaluate_at(sample_path(...), t) and much cheaper for transform checks.
double sample_total(const SubordinatorSpec& spec, double t, RngStream& rng);

/// beta0*t + sum of jumps up to and including time t. Right-continuous,
/// nondecreasing. Domain error outside [0, horizon].
double evaluate_at(const PathSample& path, double t);

/// Mean and variance of the tempered subordinator at time t (Eq. values
/// t*alpha*theta^{alpha-1}*e^{-theta} and that plus
/// alpha*(1-alpha)*t*theta^{alpha-2}*e^{-theta}). Infinite for theta = 0.
std::pair<double, double> tempered_mean_var(const SubordinatorSpec& spec, double t);

/// Large-x tail asymptote t*x^{-alpha}/Gamma(1-alpha), alpha in (0,1).
double tail_asymptote(double alpha, double t, double x);

/// Large-t fractional moment asymptote Gamma(1-p/alpha)/Gamma(1-p)*t^{p/alpha}
/// for 0 < p < alpha (the prefactor has a pole at p = alpha).
double frac_moment_asymptote(double alpha, double p, double t);

/// 2-D compound Poisson with Levy measure
///   scale_C * (alpha/Gamma(1-alpha)) (rho-eps)^{-alpha} rho^{-1} M(d angle);
/// rate scale_C*alpha*Gamma(alpha)*eps^{-alpha}, each jump R*(cos b, sin b)
/// with R distributed as a univariate floor-epsilon jump.
MvPathSample sample_mv_path(double alpha, double epsilon, const DirectionMeasure2D& m,
                            double horizon, RngStream& rng);

/// The matching 2-D Bernstein function
///   scale_C * sum_i w_i (theta_i . eta)^alpha O_eps(theta_i . eta).
double mv_laplace_exponent(double alpha, double epsilon, const DirectionMeasure2D& m,
                           double eta1, double eta2);

/// Componentwise terminal value of a multivariate path.
std::array<double, 2> mv_evaluate_at(const MvPathSample& path, double t);

} // namespace igsub
