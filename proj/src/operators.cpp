#include "igsub/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "igsub/stats.hpp"
#include "igsub/subordinator.hpp"

namespace igsub {

GridFunction GridFunction::from_samples(std::vector<double> grid, std::vector<double> values) {
    GridFunction g;
    g.grid = std::move(grid);
    g.values = std::move(values);
    g.validate();
    return g;
}

GridFunction GridFunction::from_function(const std::function<double(double)>& f, double lo,
                                         double hi, std::size_t n,
                                         std::function<double(double)> deriv) {
    if (n < 2 || !(hi > lo)) throw std::domain_error("GridFunction: bad grid request");
    GridFunction g;
    g.grid.resize(n);
    g.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        g.grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        g.values[i] = f(g.grid[i]);
    }
    g.fn = f;
    g.dfn = std::move(deriv);
    g.validate();
    return g;
}

void GridFunction::validate() const {
    if (grid.size() != values.size() || grid.size() < 2)
        throw std::domain_error("GridFunction: grid/values size mismatch");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::domain_error("GridFunction: grid must be strictly increasing");
}

double GridFunction::eval(double x) const {
    if (x < grid.front()) return 0.0; // extension by zero to the left
    if (x > grid.back() * (1.0 + 1e-14) + 1e-300)
        throw std::domain_error("GridFunction: evaluation beyond the grid");
    if (fn) return fn(x);
    // 4-point Lagrange stencil around x.
    const auto it = std::upper_bound(grid.begin(), grid.end(), x);
    std::size_t i = static_cast<std::size_t>(it - grid.begin());
    std::size_t lo = i >= 2 ? i - 2 : 0;
    lo = std::min(lo, grid.size() - 4);
    double out = 0.0;
    for (std::size_t j = lo; j < lo + 4; ++j) {
        double basis = 1.0;
        for (std::size_t k = lo; k < lo + 4; ++k) {
            if (k == j) continue;
            basis *= (x - grid[k]) / (grid[j] - grid[k]);
        }
        out += values[j] * basis;
    }
    return out;
}

double GridFunction::deriv(double x) const {
    if (dfn) return dfn(x);
    // Richardson-extrapolated central differences at the local spacing.
    const auto it = std::upper_bound(grid.begin(), grid.end(), x);
    const std::size_t i = std::min<std::size_t>(
        std::max<std::ptrdiff_t>(it - grid.begin(), 1), grid.size() - 1);
    double h = grid[i] - grid[i - 1];
    h = std::min(h, x - grid.front());
    if (h <= 0.0) h = grid[1] - grid[0];
    const double d1 = (eval(x + h) - eval(x - h)) / (2.0 * h);
    const double d2 = (eval(x + h / 2) - eval(x - h / 2)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

namespace {

// Exact integral of the piecewise-linear interpolant of f against the Abel
// kernel (x-t)^{-alpha} over [0, x]:
//   per cell [a,b]: int_a^b (p + q t)(x-t)^{-alpha} dt with s = x-t,
//   = (p + q x) * [s^{1-alpha}/(1-alpha)]_{x-b}^{x-a} - q [s^{2-alpha}/(2-alpha)]_{x-b}^{x-a}.
double abel_integral(const GridFunction& f, double alpha, double x) {
    const double one_m = 1.0 - alpha;
    const double two_m = 2.0 - alpha;
    auto s_pow = [&](double s, double e) { return s <= 0.0 ? 0.0 : std::pow(s, e); };
    double total = 0.0;
    const auto& g = f.grid;
    // The region left of the grid contributes 0 by the extension convention.
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        const double a = std::max(g[i], 0.0);
        const double b = std::min(g[i + 1], x);
        if (b <= a) {
            if (g[i] >= x) break;
            continue;
        }
        // Chord of f over the piece actually integrated.
        const double fa = f.fn ? f.fn(a) : f.values[i];
        const double fb = f.fn ? f.fn(b) : f.values[i + 1];
        const double xa = f.fn ? a : g[i];
        const double xb = f.fn ? b : g[i + 1];
        const double q = (fb - fa) / (xb - xa);
        const double p = fa - q * xa;
        const double sa = x - a, sb = x - b;
        const double j1 = (s_pow(sa, one_m) - s_pow(sb, one_m)) / one_m;
        const double j2 = (s_pow(sa, two_m) - s_pow(sb, two_m)) / two_m;
        total += (p + q * x) * j1 - q * j2;
        if (g[i + 1] >= x) break;
    }
    return total;
}

} // namespace

double rl_derivative(const GridFunction& f, double alpha, double x, double* err_est) {
    f.validate();
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("rl_derivative: alpha must be in (0,1]");
    if (!(x > 0.0 && x <= f.grid.back()))
        throw std::domain_error("rl_derivative: x outside the grid range");
    if (alpha == 1.0) {
        if (err_est) *err_est = 0.0;
        return f.deriv(x);
    }
    // Local spacing for the differencing step.
    const auto it = std::upper_bound(f.grid.begin(), f.grid.end(), x);
    const std::size_t i = std::min<std::size_t>(
        std::max<std::ptrdiff_t>(it - f.grid.begin(), 1), f.grid.size() - 1);
    double h = f.grid[i] - f.grid[i - 1];
    if (x - 2.0 * h < 0.0) h = x / 4.0;
    if (x + h > f.grid.back()) h = std::min(h, f.grid.back() - x);
    if (!(h > 0.0))
        throw std::domain_error("rl_derivative: x must be interior to the grid for differencing");
    auto I = [&](double xi) { return abel_integral(f, alpha, xi); };
    const double d1 = (I(x + h) - I(x - h)) / (2.0 * h);
    const double d2 = (I(x + h / 2) - I(x - h / 2)) / h;
    const double rich = (4.0 * d2 - d1) / 3.0;
    if (err_est) *err_est = std::abs(d2 - d1) / 3.0;
    return rich / gamma_complete(1.0 - alpha);
}

double o_epsilon_transfer(double eta, double epsilon, double alpha) {
    if (!(epsilon > 0.0)) throw std::domain_error("o_epsilon_transfer: epsilon must be > 0");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("o_epsilon_transfer: alpha must be in (0,1]");
    if (!(eta >= 0.0)) throw std::domain_error("o_epsilon_transfer: eta must be >= 0");
    if (eta == 0.0) return 1.0;
    const double x = eta * epsilon;
    return alpha * std::pow(x, -alpha) * lower_inc_gamma(alpha, x);
}

double o_epsilon_apply(const GridFunction& h, double epsilon, double alpha, double x,
                       const QuadOptions& opt) {
    h.validate();
    if (!(epsilon > 0.0)) throw std::domain_error("o_epsilon_apply: epsilon must be > 0");
    QuadOptions q = opt;
    q.lo_power = alpha - 1.0;
    const double integral =
        quad_adaptive([&](double y) { return h.eval(x - y) * std::pow(y, alpha - 1.0); }, 0.0,
                      epsilon, q);
    return alpha / std::pow(epsilon, alpha) * integral;
}

double tempered_caputo(const GridFunction& u, const OperatorParams& params, double t,
                       const QuadOptions& opt) {
    u.validate();
    if (!(params.rho > 0.0 && params.rho < 1.0))
        throw std::domain_error("tempered_caputo: rho must be in (0,1)");
    if (!(params.lambda_rate > 0.0))
        throw std::domain_error("tempered_caputo: lambda must be > 0");
    if (!(t > 0.0)) throw std::domain_error("tempered_caputo: t must be > 0");
    const double rho = params.rho, lam = params.lambda_rate;
    QuadOptions q = opt;
    q.lo_power = -rho; // Gamma(-rho, lam*s) ~ (lam s)^{-rho}/rho at s -> 0
    if (u.origin_power) q.hi_power = *u.origin_power;
    const double integral = quad_adaptive(
        [&](double s) { return u.deriv(t - s) * upper_inc_gamma(-rho, lam * s); }, 0.0, t, q);
    return rho * std::pow(lam, rho) / gamma_complete(1.0 - rho) * integral;
}

GridFunction relaxation_residual(double alpha, const std::vector<double>& x_grid) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("relaxation_residual: alpha must be in (0,1)");
    if (x_grid.empty()) throw std::domain_error("relaxation_residual: empty grid");
    const double g_alpha = gamma_complete(alpha);
    const double x_max = x_grid.back();
    GridFunction u;
    u.grid = {0.0, x_max * 2.0};
    u.values = {0.0, 0.0}; // unused: analytic callbacks are set
    u.fn = [alpha](double x) { return x <= 0.0 ? 0.0 : lower_inc_gamma(alpha, x); };
    u.dfn = [alpha](double x) { return std::exp(-x + (alpha - 1.0) * std::log(x)); };
    u.origin_power = alpha - 1.0;

    GridFunction out;
    out.grid = x_grid;
    out.values.resize(x_grid.size());
    const OperatorParams params{alpha, 1.0, alpha, 1.0};
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        const double x = x_grid[i];
        if (!(x > 0.0))
            throw std::domain_error("relaxation_residual: grid must be strictly positive");
        const double lhs = tempered_caputo(u, params, x);
        out.values[i] = lhs - (g_alpha - lower_inc_gamma(alpha, x));
    }
    out.validate();
    return out;
}

bool GoverningCheckReport::all_pass() const {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

GoverningCheckReport governing_check_eps(double alpha, double epsilon, double t,
                                         const std::vector<double>& eta_grid,
                                         std::size_t n_paths, std::uint64_t master_seed,
                                         int threads) {
    if (n_paths < 2) throw std::domain_error("governing_check_eps: needs n_paths >= 2");
    const auto spec = SubordinatorSpec::eps_floor(alpha, epsilon);
    std::vector<double> totals(n_paths);
    parallel_for(n_paths, threads, [&](std::size_t i) {
        RngStream rng = RngStream::from_master(master_seed, i);
        totals[i] = sample_total(spec, t, rng);
    });

    GoverningCheckReport report;
    report.alpha = alpha;
    report.epsilon = epsilon;
    report.t = t;
    report.n_paths = n_paths;
    report.master_seed = master_seed;
    std::vector<double> transformed(n_paths);
    for (double eta : eta_grid) {
        for (std::size_t i = 0; i < n_paths; ++i)
            transformed[i] = std::exp(-eta * totals[i]);
        const auto est = mc_mean(transformed, master_seed, n_paths);
        GoverningCheckRow row;
        row.eta = eta;
        row.mc_mean = est.mean;
        row.mc_stderr = est.stderror;
        row.target = std::exp(-std::pow(eta, alpha) * o_epsilon_transfer(eta, epsilon, alpha) * t);
        row.pass = std::abs(est.mean - row.target) <= 4.0 * est.stderror;
        report.rows.push_back(row);
    }
    return report;
}

double marchaud_approx(const std::function<double(double)>& g, double alpha, double epsilon,
                       double x, const QuadOptions& opt) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("marchaud_approx: alpha must be in (0,1)");
    if (!(epsilon > 0.0)) throw std::domain_error("marchaud_approx: epsilon must be > 0");
    const double gx = g(x);
    const double norm = alpha / gamma_complete(1.0 - alpha);
    QuadOptions q = opt;
    q.lo_power = -alpha;            // (s-eps)^{-alpha} edge
    q.hi_power = -(alpha + 1.0);    // kernel tail s^{-alpha-1}
    return norm * quad_adaptive(
                      [&](double s) {
                          return (g(x - s) - gx) * std::pow(s - epsilon, -alpha) / s;
                      },
                      epsilon, std::numeric_limits<double>::infinity(), q);
}

} // namespace igsub
