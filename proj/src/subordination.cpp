#include "igsub/subordination.hpp"

#include <cmath>
#include <limits>

namespace igsub {

LevySymbolDescriptor LevySymbolDescriptor::brownian() {
    LevySymbolDescriptor d;
    d.psi = [](double u) { return std::complex<double>(-0.5 * u * u, 0.0); };
    d.a = 0.0;
    d.b = 1.0;
    return d;
}

LevySymbolDescriptor LevySymbolDescriptor::pure_drift(double c) {
    LevySymbolDescriptor d;
    d.psi = [c](double u) { return std::complex<double>(0.0, c * u); };
    d.a = c;
    d.b = 0.0;
    return d;
}

namespace {

// int_theta^{theta - psi} e^{-w} w^{a-1} dw along the straight segment.
std::complex<double> inc_gamma_segment(double a, double theta, std::complex<double> psi) {
    const std::complex<double> delta = -psi;
    auto integrand_re = [&](double tau) {
        const std::complex<double> w = theta + tau * delta;
        const std::complex<double> v = std::exp(-w + (a - 1.0) * std::log(w)) * delta;
        return v.real();
    };
    auto integrand_im = [&](double tau) {
        const std::complex<double> w = theta + tau * delta;
        const std::complex<double> v = std::exp(-w + (a - 1.0) * std::log(w)) * delta;
        return v.imag();
    };
    QuadOptions opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-14;
    if (theta == 0.0) opt.lo_power = a - 1.0; // w^{a-1} edge when starting at the origin
    const double re = quad_adaptive(integrand_re, 0.0, 1.0, opt);
    const double im = quad_adaptive(integrand_im, 0.0, 1.0, opt);
    return {re, im};
}

} // namespace

std::function<std::complex<double>(double)> subordinate_symbol(
    const LevySymbolDescriptor& x_symbol, const SubordinatorSpec& spec) {
    spec.validate();
    if (spec.family() == Family::eps_floor)
        throw std::domain_error("subordinate_symbol: defined for the floor-1 families only");
    if (!x_symbol.psi) throw std::domain_error("subordinate_symbol: psi callback missing");
    const double alpha = spec.alpha;
    const double theta = spec.theta;
    const double beta0 = spec.beta0;
    auto psi_x = x_symbol.psi;
    return [alpha, theta, beta0, psi_x](double u) -> std::complex<double> {
        const std::complex<double> px = psi_x(u);
        if (u == 0.0 || px == std::complex<double>(0.0, 0.0))
            return beta0 * px;
        std::complex<double> delta; // alpha * int_theta^{theta-psi} e^{-w} w^{alpha-1} dw
        if (px.imag() == 0.0 && theta - px.real() >= 0.0) {
            delta = alpha * (lower_inc_gamma(alpha, theta - px.real()) -
                             (theta > 0.0 ? lower_inc_gamma(alpha, theta) : 0.0));
        } else if (std::abs(std::complex<double>(theta, 0.0) - px) <= 30.0 && theta <= 30.0) {
            const std::complex<double> g_hi =
                lower_inc_gamma_c(alpha, std::complex<double>(theta, 0.0) - px);
            const std::complex<double> g_lo =
                theta > 0.0 ? std::complex<double>(lower_inc_gamma(alpha, theta), 0.0)
                            : std::complex<double>(0.0, 0.0);
            delta = alpha * (g_hi - g_lo);
        } else {
            delta = alpha * inc_gamma_segment(alpha, theta, px);
        }
        return -delta + beta0 * px;
    };
}

SubordinatedTriplet subordinate_triplet(const LevySymbolDescriptor& x_triplet,
                                        const SubordinatorSpec& spec,
                                        const std::function<double(double, double)>& mu_z) {
    spec.validate();
    if (spec.family() == Family::eps_floor)
        throw std::domain_error("subordinate_triplet: defined for the floor-1 families only");
    if (!mu_z) throw std::domain_error("subordinate_triplet: mu_z callback missing");
    const double beta0 = spec.beta0;

    SubordinatedTriplet out;
    out.a = beta0 * x_triplet.a;

    const double inf = std::numeric_limits<double>::infinity();
    QuadOptions outer;
    outer.lo_power = -spec.alpha;                                // (z-1)^{-alpha} edge
    if (spec.theta == 0.0) outer.hi_power = -(spec.alpha + 1.0); // algebraic tail
    outer.abs_tol = 1e-12;

    // b' = beta0 b + int pi(dz) int_{|x|<=1} x mu_z(dx)
    auto inner_first_moment = [&](double z) {
        QuadOptions inner;
        inner.abs_tol = 1e-14;
        return quad_adaptive([&](double x) { return x * mu_z(z, x); }, -1.0, 1.0, inner);
    };
    out.b = beta0 * x_triplet.b +
            quad_adaptive([&](double z) { return inner_first_moment(z) * levy_density(spec, z); },
                          1.0, inf, outer);

    auto base_nu = x_triplet.nu_density;
    out.nu_density = [spec, mu_z, base_nu, beta0, outer, inf](double x) {
        double v = quad_adaptive(
            [&](double z) { return mu_z(z, x) * levy_density(spec, z); }, 1.0, inf, outer);
        if (beta0 > 0.0 && base_nu) v += beta0 * base_nu(x);
        return v;
    };
    return out;
}

double bm_levy_density(double x, double alpha, double theta) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("bm_levy_density: alpha must be in (0,1)");
    if (!(theta >= 0.0)) throw std::domain_error("bm_levy_density: theta must be >= 0");
    if (theta == 0.0) {
        constexpr double pi = 3.141592653589793238462643383279503;
        return std::sqrt(2.0) * alpha * gamma_complete(alpha + 0.5) / pi *
               kummer_1f1(alpha + 0.5, 1.5, -0.5 * x * x);
    }
    const double inf = std::numeric_limits<double>::infinity();
    constexpr double two_pi = 6.283185307179586476925286766559;
    QuadOptions opt;
    opt.lo_power = -alpha;
    opt.abs_tol = 1e-16;
    const double norm = alpha / gamma_complete(1.0 - alpha);
    return quad_adaptive(
        [&](double z) {
            return std::exp(-0.5 * x * x / z) / std::sqrt(two_pi * z) *
                   std::pow(z - 1.0, -alpha) / z * std::exp(-theta * z);
        },
        1.0, inf, opt) * norm;
}

TimeChangedPath sample_subordinated_bm(const SubordinatorSpec& spec,
                                       const std::vector<double>& time_grid, RngStream& rng) {
    spec.validate();
    if (time_grid.empty() || !(time_grid.front() >= 0.0))
        throw std::domain_error("sample_subordinated_bm: bad time grid");
    for (std::size_t i = 1; i < time_grid.size(); ++i)
        if (!(time_grid[i] > time_grid[i - 1]))
            throw std::domain_error("sample_subordinated_bm: time grid must be increasing");

    const PathSample clock_path = sample_path(spec, time_grid.back(), rng);
    TimeChangedPath out;
    out.time_grid = time_grid;
    out.inner_clock.resize(time_grid.size());
    for (std::size_t i = 0; i < time_grid.size(); ++i)
        out.inner_clock[i] = evaluate_at(clock_path, time_grid[i]);

    out.outer_values.resize(time_grid.size());
    double prev_clock = 0.0, value = 0.0;
    for (std::size_t i = 0; i < time_grid.size(); ++i) {
        const double dc = out.inner_clock[i] - prev_clock;
        if (dc > 0.0) value += std::sqrt(dc) * rng.normal();
        prev_clock = out.inner_clock[i];
        out.outer_values[i] = value;
    }
    return out;
}

double bm_autocovariance(const SubordinatorSpec& spec, double t, double tau) {
    spec.validate();
    if (spec.family() == Family::eps_floor)
        throw std::domain_error("bm_autocovariance: defined for the floor-1 families only");
    if (!(t >= 0.0 && tau >= 0.0))
        throw std::domain_error("bm_autocovariance: times must be >= 0");
    if (spec.theta == 0.0 && spec.alpha < 1.0)
        throw infinite_moment_error(
            "bm_autocovariance: infinite for theta = 0 with alpha < 1");
    const double m = std::min(t, tau);
    // theta^{alpha-1} with the 0^0 = 1 convention covers alpha = 1, theta = 0.
    const double pw = (spec.theta == 0.0 && spec.alpha == 1.0)
                          ? 1.0
                          : std::pow(spec.theta, spec.alpha - 1.0);
    return spec.beta0 * m + m * spec.alpha * pw * std::exp(-spec.theta);
}

double phillips_apply(const std::function<double(double)>& g, double alpha, double epsilon,
                      const std::function<double(double, double)>& semigroup, double x,
                      const QuadOptions& opt) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("phillips_apply: alpha must be in (0,1)");
    if (!(epsilon > 0.0)) throw std::domain_error("phillips_apply: epsilon must be > 0");
    const double gx = g(x);
    const double norm = alpha / gamma_complete(1.0 - alpha);
    QuadOptions q = opt;
    q.lo_power = -alpha;
    q.hi_power = -(alpha + 1.0);
    return norm * quad_adaptive(
                      [&](double s) {
                          return (semigroup(s, x) - gx) * std::pow(s - epsilon, -alpha) / s;
                      },
                      epsilon, std::numeric_limits<double>::infinity(), q);
}

} // namespace igsub
