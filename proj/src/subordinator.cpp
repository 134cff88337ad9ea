#include "igsub/subordinator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "igsub/specfun.hpp"

namespace igsub {

SubordinatorSpec SubordinatorSpec::plain(double alpha, double beta0) {
    SubordinatorSpec s;
    s.alpha = alpha;
    s.beta0 = beta0;
    s.validate();
    return s;
}

SubordinatorSpec SubordinatorSpec::tempered(double alpha, double theta, double beta0) {
    SubordinatorSpec s;
    s.alpha = alpha;
    s.theta = theta;
    s.beta0 = beta0;
    s.validate();
    return s;
}

SubordinatorSpec SubordinatorSpec::eps_floor(double alpha, double epsilon, double beta0) {
    SubordinatorSpec s;
    s.alpha = alpha;
    s.epsilon = epsilon;
    s.beta0 = beta0;
    s.validate();
    return s;
}

Family SubordinatorSpec::family() const {
    if (epsilon) return Family::eps_floor;
    if (theta > 0.0) return Family::tempered;
    return Family::plain;
}

void SubordinatorSpec::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("SubordinatorSpec: alpha must be in (0,1]");
    if (!(theta >= 0.0)) throw std::domain_error("SubordinatorSpec: theta must be >= 0");
    if (epsilon && !(*epsilon > 0.0))
        throw std::domain_error("SubordinatorSpec: epsilon must be > 0");
    if (epsilon && theta > 0.0)
        throw std::domain_error("SubordinatorSpec: tempering is defined only for jump floor 1");
    if (!(beta0 >= 0.0)) throw std::domain_error("SubordinatorSpec: beta0 must be >= 0");
}

void DirectionMeasure2D::validate() const {
    if (angles.empty() || angles.size() != weights.size())
        throw std::domain_error("DirectionMeasure2D: angles/weights size mismatch");
    constexpr double half_pi = 1.5707963267948966;
    double wsum = 0.0;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (!(angles[i] >= 0.0 && angles[i] <= half_pi))
            throw std::domain_error("DirectionMeasure2D: angles must lie in [0, pi/2]");
        if (!(weights[i] > 0.0))
            throw std::domain_error("DirectionMeasure2D: weights must be positive");
        wsum += weights[i];
    }
    if (std::abs(wsum - 1.0) > 1e-12)
        throw std::domain_error("DirectionMeasure2D: weights must sum to 1");
    if (!(scale_C > 0.0)) throw std::domain_error("DirectionMeasure2D: scale_C must be > 0");
}

double laplace_exponent(const SubordinatorSpec& spec, double eta) {
    spec.validate();
    if (!(eta >= 0.0)) throw std::domain_error("laplace_exponent: eta must be >= 0");
    const double drift_part = spec.beta0 * eta;
    if (eta == 0.0) return 0.0;
    switch (spec.family()) {
        case Family::plain:
            return drift_part + spec.alpha * lower_inc_gamma(spec.alpha, eta);
        case Family::tempered:
            return drift_part + spec.alpha * (lower_inc_gamma(spec.alpha, eta + spec.theta) -
                                              lower_inc_gamma(spec.alpha, spec.theta));
        case Family::eps_floor: {
            const double eps = *spec.epsilon;
            return drift_part + spec.alpha / std::pow(eps, spec.alpha) *
                                    lower_inc_gamma(spec.alpha, eta * eps);
        }
    }
    return drift_part;
}

double poisson_rate(const SubordinatorSpec& spec) {
    spec.validate();
    switch (spec.family()) {
        case Family::plain:
            return spec.alpha * gamma_complete(spec.alpha);
        case Family::tempered:
            return spec.alpha * upper_inc_gamma(spec.alpha, spec.theta);
        case Family::eps_floor:
            return spec.alpha * gamma_complete(spec.alpha) * std::pow(*spec.epsilon, -spec.alpha);
    }
    return 0.0;
}

double levy_density(const SubordinatorSpec& spec, double z) {
    spec.validate();
    if (!(z > 0.0)) throw std::domain_error("levy_density: z must be > 0");
    const double floor = spec.jump_floor();
    if (z < floor) return 0.0;
    if (spec.alpha == 1.0) {
        // Levy measure degenerates to an atom at the floor.
        return z == floor ? std::numeric_limits<double>::infinity() : 0.0;
    }
    if (z == floor) return std::numeric_limits<double>::infinity();
    const double base = spec.alpha * std::pow(z - floor, -spec.alpha) / z /
                        gamma_complete(1.0 - spec.alpha);
    if (spec.family() == Family::tempered) return base * std::exp(-spec.theta * z);
    return base;
}

double sample_jump(const SubordinatorSpec& spec, RngStream& rng) {
    const double floor = spec.jump_floor();
    if (spec.alpha == 1.0) return floor;
    switch (spec.family()) {
        case Family::plain:
        case Family::eps_floor: {
            const double u = rng.beta(1.0 - spec.alpha, spec.alpha);
            return floor / (1.0 - u);
        }
        case Family::tempered: {
            for (int attempt = 0; attempt < 1000000; ++attempt) {
                const double u = rng.beta(1.0 - spec.alpha, spec.alpha);
                const double z = 1.0 / (1.0 - u);
                if (rng.uniform01() <= std::exp(-spec.theta * (z - 1.0))) return z;
            }
            throw convergence_error(
                "sample_jump: tempered rejection exceeded 1e6 attempts (theta too large?)",
                spec.theta);
        }
    }
    return floor;
}

PathSample sample_path(const SubordinatorSpec& spec, double horizon, RngStream& rng) {
    spec.validate();
    if (!(horizon >= 0.0)) throw std::domain_error("sample_path: horizon must be >= 0");
    PathSample path;
    path.horizon = horizon;
    path.drift = spec.beta0;
    const double mean_jumps = poisson_rate(spec) * horizon;
    const std::uint64_t n = rng.poisson(mean_jumps);
    path.jump_times.resize(n);
    for (auto& t : path.jump_times) t = horizon * rng.uniform_co();
    std::sort(path.jump_times.begin(), path.jump_times.end());
    path.jump_sizes.resize(n);
    for (auto& z : path.jump_sizes) z = sample_jump(spec, rng);
    path.cumulative.resize(n);
    std::partial_sum(path.jump_sizes.begin(), path.jump_sizes.end(), path.cumulative.begin());
    return path;
}

double sample_total(const SubordinatorSpec& spec, double t, RngStream& rng) {
    const std::uint64_t n = rng.poisson(poisson_rate(spec) * t);
    double total = spec.beta0 * t;
    for (std::uint64_t j = 0; j < n; ++j) total += sample_jump(spec, rng);
    return total;
}

double evaluate_at(const PathSample& path, double t) {
    if (!(t >= 0.0 && t <= path.horizon))
        throw std::domain_error("evaluate_at: t outside [0, horizon]");
    const auto it = std::upper_bound(path.jump_times.begin(), path.jump_times.end(), t);
    const auto idx = static_cast<std::size_t>(it - path.jump_times.begin());
    const double jumps = idx == 0 ? 0.0 : path.cumulative[idx - 1];
    return path.drift * t + jumps;
}

std::pair<double, double> tempered_mean_var(const SubordinatorSpec& spec, double t) {
    spec.validate();
    if (!(spec.theta > 0.0))
        throw infinite_moment_error(
            "tempered_mean_var: integer moments are infinite without tempering");
    const double a = spec.alpha, th = spec.theta;
    const double mean = t * a * std::pow(th, a - 1.0) * std::exp(-th);
    const double var = mean + a * (1.0 - a) * t * std::pow(th, a - 2.0) * std::exp(-th);
    return {mean, var};
}

double tail_asymptote(double alpha, double t, double x) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("tail_asymptote: alpha must be in (0,1)");
    if (!(x > 0.0)) throw std::domain_error("tail_asymptote: x must be > 0");
    return t * std::pow(x, -alpha) / gamma_complete(1.0 - alpha);
}

double frac_moment_asymptote(double alpha, double p, double t) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("frac_moment_asymptote: alpha must be in (0,1)");
    if (!(p > 0.0 && p < alpha))
        throw std::domain_error(
            "frac_moment_asymptote: requires 0 < p < alpha (prefactor pole at p = alpha)");
    return gamma_complete(1.0 - p / alpha) / gamma_complete(1.0 - p) * std::pow(t, p / alpha);
}

MvPathSample sample_mv_path(double alpha, double epsilon, const DirectionMeasure2D& m,
                            double horizon, RngStream& rng) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("sample_mv_path: alpha must be in (0,1]");
    if (!(epsilon > 0.0)) throw std::domain_error("sample_mv_path: epsilon must be > 0");
    if (!(horizon >= 0.0)) throw std::domain_error("sample_mv_path: horizon must be >= 0");
    m.validate();

    const double rate =
        m.scale_C * alpha * gamma_complete(alpha) * std::pow(epsilon, -alpha);
    MvPathSample path;
    path.horizon = horizon;
    const std::uint64_t n = rng.poisson(rate * horizon);
    path.jump_times.resize(n);
    for (auto& t : path.jump_times) t = horizon * rng.uniform_co();
    std::sort(path.jump_times.begin(), path.jump_times.end());
    path.jump_vectors.resize(n);
    std::vector<double> wcum(m.weights.size());
    std::partial_sum(m.weights.begin(), m.weights.end(), wcum.begin());
    for (auto& v : path.jump_vectors) {
        double radius;
        if (alpha == 1.0) {
            radius = epsilon;
        } else {
            radius = epsilon / (1.0 - rng.beta(1.0 - alpha, alpha));
        }
        const double u = rng.uniform_co();
        const auto it = std::upper_bound(wcum.begin(), wcum.end(), u);
        const auto idx = std::min<std::size_t>(it - wcum.begin(), m.angles.size() - 1);
        v = {radius * std::cos(m.angles[idx]), radius * std::sin(m.angles[idx])};
    }
    return path;
}

double mv_laplace_exponent(double alpha, double epsilon, const DirectionMeasure2D& m,
                           double eta1, double eta2) {
    m.validate();
    if (!(eta1 >= 0.0 && eta2 >= 0.0))
        throw std::domain_error("mv_laplace_exponent: eta components must be >= 0");
    double phi = 0.0;
    for (std::size_t i = 0; i < m.angles.size(); ++i) {
        const double s = eta1 * std::cos(m.angles[i]) + eta2 * std::sin(m.angles[i]);
        if (s <= 0.0) continue;
        // (theta . eta)^alpha * O_eps(theta . eta) == phi_eps(theta . eta)
        phi += m.weights[i] * alpha / std::pow(epsilon, alpha) *
               lower_inc_gamma(alpha, s * epsilon);
    }
    return m.scale_C * phi;
}

std::array<double, 2> mv_evaluate_at(const MvPathSample& path, double t) {
    if (!(t >= 0.0 && t <= path.horizon))
        throw std::domain_error("mv_evaluate_at: t outside [0, horizon]");
    std::array<double, 2> total{0.0, 0.0};
    for (std::size_t i = 0; i < path.jump_times.size() && path.jump_times[i] <= t; ++i) {
        total[0] += path.jump_vectors[i][0];
        total[1] += path.jump_vectors[i][1];
    }
    return total;
}

} // namespace igsub
