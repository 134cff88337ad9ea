#include "igsub/fbm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "igsub/specfun.hpp"
#include "igsub/subordinator.hpp"

namespace igsub {

namespace {

constexpr std::size_t kMaxDense = 4096;

double fbm_cov(double hurst, double s, double t) {
    const double h2 = 2.0 * hurst;
    return 0.5 * (std::pow(s, h2) + std::pow(t, h2) - std::pow(std::abs(t - s), h2));
}

// In-place lower Cholesky of a dense SPD matrix (row-major). Returns false
// when positivity is lost.
bool cholesky(std::vector<double>& m, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        double d = m[j * n + j];
        for (std::size_t k = 0; k < j; ++k) d -= m[j * n + k] * m[j * n + k];
        if (!(d > 0.0)) return false;
        const double ljj = std::sqrt(d);
        m[j * n + j] = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double v = m[i * n + j];
            for (std::size_t k = 0; k < j; ++k) v -= m[i * n + k] * m[j * n + k];
            m[i * n + j] = v / ljj;
        }
    }
    return true;
}

// Gaussian vector with the fBm covariance at strictly increasing positive
// times.
std::vector<double> fbm_gaussian(double hurst, const std::vector<double>& times,
                                 RngStream& rng) {
    const std::size_t n = times.size();
    std::vector<double> cov(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            cov[i * n + j] = cov[j * n + i] = fbm_cov(hurst, times[i], times[j]);
    if (!cholesky(cov, n)) {
        double min_gap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < n; ++i)
            min_gap = std::min(min_gap, times[i] - times[i - 1]);
        throw convergence_error(
            "sample_fbm_at: covariance factorization failed; smallest time gap " +
                std::to_string(min_gap) + " is likely a near-duplicate (jitter the times)",
            min_gap);
    }
    std::vector<double> z(n), out(n);
    for (auto& v : z) v = rng.normal();
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k <= i; ++k) acc += cov[i * n + k] * z[k];
        out[i] = acc;
    }
    return out;
}

} // namespace

FbmPath sample_fbm_at(double hurst, const std::vector<double>& times, RngStream& rng) {
    if (!(hurst > 0.0 && hurst < 1.0))
        throw std::domain_error("sample_fbm_at: H must be in (0,1)");
    if (times.empty()) throw std::domain_error("sample_fbm_at: empty time set");
    if (times.size() > kMaxDense)
        throw std::domain_error("sample_fbm_at: beyond the dense-factorization scale");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0)) throw std::domain_error("sample_fbm_at: negative time");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw std::domain_error("sample_fbm_at: times must be strictly increasing");
    }
    FbmPath path;
    path.times = times;
    path.values.assign(times.size(), 0.0);
    std::vector<double> positive(times.begin() + (times.front() == 0.0 ? 1 : 0), times.end());
    if (positive.empty()) return path;
    const std::vector<double> vals = fbm_gaussian(hurst, positive, rng);
    const std::size_t offset = times.size() - positive.size();
    for (std::size_t i = 0; i < vals.size(); ++i) path.values[offset + i] = vals[i];
    return path;
}

double fbm_abs_moment(double hurst, double q, double t) {
    if (!(hurst > 0.0 && hurst < 1.0))
        throw std::domain_error("fbm_abs_moment: H must be in (0,1)");
    if (!(q > -1.0)) throw std::domain_error("fbm_abs_moment: q must be > -1");
    constexpr double pi = 3.141592653589793238462643383279503;
    return std::sqrt(std::pow(2.0, q) / pi) * gamma_complete(0.5 * (q + 1.0)) *
           std::pow(t, q * hurst);
}

TimeChangedFbmPath sample_time_changed_fbm(double hurst, double alpha, double horizon,
                                           const std::vector<double>& eval_times,
                                           RngStream& clock_rng, RngStream& gauss_rng) {
    if (eval_times.empty())
        throw std::domain_error("sample_time_changed_fbm: empty eval times");
    if (!(eval_times.back() <= horizon))
        throw std::domain_error("sample_time_changed_fbm: eval times beyond horizon");
    const auto spec = SubordinatorSpec::plain(alpha);
    const PathSample clock_path = sample_path(spec, horizon, clock_rng);

    TimeChangedFbmPath out;
    out.eval_times = eval_times;
    out.clock.resize(eval_times.size());
    for (std::size_t i = 0; i < eval_times.size(); ++i)
        out.clock[i] = evaluate_at(clock_path, eval_times[i]);

    // The clock is a staircase: flat stretches give exactly equal values, so
    // deduplicate before factorizing.
    std::vector<double> unique_pos;
    unique_pos.reserve(out.clock.size());
    for (double c : out.clock)
        if (c > 0.0 && (unique_pos.empty() || c > unique_pos.back())) unique_pos.push_back(c);

    out.values.assign(eval_times.size(), 0.0);
    if (!unique_pos.empty()) {
        const std::vector<double> gauss = fbm_gaussian(hurst, unique_pos, gauss_rng);
        for (std::size_t i = 0; i < out.clock.size(); ++i) {
            if (out.clock[i] <= 0.0) continue;
            const auto it =
                std::lower_bound(unique_pos.begin(), unique_pos.end(), out.clock[i]);
            out.values[i] = gauss[static_cast<std::size_t>(it - unique_pos.begin())];
        }
    }
    return out;
}

namespace {

struct MomentTable {
    std::vector<double> sum_sq;      // per-t sum of Z^2
    std::vector<double> sum_prod;    // per-t sum of Z_t * Z_s (LRD only)
    double sum_sq_s = 0.0;           // sum of Z_s^2 (LRD only)
};

std::vector<double> largest_decade(const std::vector<double>& t_grid) {
    const double cutoff = t_grid.back() / 10.0;
    std::vector<double> out;
    for (double t : t_grid)
        if (t >= cutoff * (1.0 - 1e-12)) out.push_back(t);
    return out;
}

} // namespace

ExponentFit estimate_variance_exponent(double hurst, double alpha,
                                       const std::vector<double>& t_grid,
                                       std::size_t n_paths, std::uint64_t master_seed,
                                       int threads) {
    if (t_grid.size() < 3)
        throw std::domain_error("estimate_variance_exponent: needs at least 3 grid points");
    if (n_paths < 16)
        throw std::domain_error("estimate_variance_exponent: too few paths");
    const std::size_t m = t_grid.size();
    std::vector<double> sq(n_paths * m);
    const std::uint64_t clock_base = derive_seed(master_seed, "var-exp/clock");
    const std::uint64_t gauss_base = derive_seed(master_seed, "var-exp/gauss");
    parallel_for(n_paths, threads, [&](std::size_t i) {
        RngStream clock_rng = RngStream::from_master(clock_base, i);
        RngStream gauss_rng = RngStream::from_master(gauss_base, i);
        const auto path =
            sample_time_changed_fbm(hurst, alpha, t_grid.back(), t_grid, clock_rng, gauss_rng);
        for (std::size_t j = 0; j < m; ++j) sq[i * m + j] = path.values[j] * path.values[j];
    });

    std::vector<double> variances(m), column(n_paths);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n_paths; ++i) column[i] = sq[i * m + j];
        variances[j] = neumaier_sum(column) / static_cast<double>(n_paths);
    }

    const std::vector<double> ts = largest_decade(t_grid);
    std::vector<double> vs;
    for (double t : ts) {
        const auto idx = std::lower_bound(t_grid.begin(), t_grid.end(), t) - t_grid.begin();
        vs.push_back(variances[static_cast<std::size_t>(idx)]);
    }
    ExponentFit out;
    out.fit = loglog_fit(ts, vs);
    out.slope = out.fit.slope;
    out.slope_stderr = out.fit.slope_stderr;
    out.prefactor = std::exp(out.fit.intercept);
    out.abscissae = ts;
    out.ordinates = vs;
    out.inconclusive = out.slope_stderr > 0.25;
    return out;
}

ExponentFit estimate_lrd_exponent(double hurst, double alpha, double s,
                                  const std::vector<double>& t_grid, std::size_t n_paths,
                                  std::uint64_t master_seed, int threads) {
    if (!(hurst < 0.5))
        throw regime_error("estimate_lrd_exponent: H >= 1/2 is outside the LRD regime "
                           "(E S^{2H} infinite)");
    if (!(alpha >= 2.0 * hurst))
        throw regime_error("estimate_lrd_exponent: requires alpha >= 2H");
    if (!(s > 0.0)) throw std::domain_error("estimate_lrd_exponent: s must be > 0");
    if (t_grid.size() < 3 || !(t_grid.front() > s))
        throw std::domain_error("estimate_lrd_exponent: t grid must lie above s");
    if (n_paths < 16) throw std::domain_error("estimate_lrd_exponent: too few paths");

    std::vector<double> eval_times;
    eval_times.push_back(s);
    for (double t : t_grid) eval_times.push_back(t);
    const std::size_t m = t_grid.size();

    std::vector<double> sq(n_paths * (m + 1));
    std::vector<double> prod(n_paths * m);
    const std::uint64_t clock_base = derive_seed(master_seed, "lrd/clock");
    const std::uint64_t gauss_base = derive_seed(master_seed, "lrd/gauss");
    parallel_for(n_paths, threads, [&](std::size_t i) {
        RngStream clock_rng = RngStream::from_master(clock_base, i);
        RngStream gauss_rng = RngStream::from_master(gauss_base, i);
        const auto path = sample_time_changed_fbm(hurst, alpha, t_grid.back(), eval_times,
                                                  clock_rng, gauss_rng);
        const double zs = path.values[0];
        sq[i * (m + 1)] = zs * zs;
        for (std::size_t j = 0; j < m; ++j) {
            const double zt = path.values[j + 1];
            sq[i * (m + 1) + j + 1] = zt * zt;
            prod[i * m + j] = zt * zs;
        }
    });

    std::vector<double> column(n_paths);
    for (std::size_t i = 0; i < n_paths; ++i) column[i] = sq[i * (m + 1)];
    const double var_s = neumaier_sum(column) / static_cast<double>(n_paths);

    std::vector<double> corr(m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n_paths; ++i) column[i] = sq[i * (m + 1) + j + 1];
        const double var_t = neumaier_sum(column) / static_cast<double>(n_paths);
        for (std::size_t i = 0; i < n_paths; ++i) column[i] = prod[i * m + j];
        const double cov = neumaier_sum(column) / static_cast<double>(n_paths);
        corr[j] = cov / std::sqrt(var_t * var_s);
    }

    const std::vector<double> ts = largest_decade(t_grid);
    std::vector<double> cs;
    for (double t : ts) {
        const auto idx = std::lower_bound(t_grid.begin(), t_grid.end(), t) - t_grid.begin();
        const double c = corr[static_cast<std::size_t>(idx)];
        if (!(c > 0.0))
            throw convergence_error(
                "estimate_lrd_exponent: correlation estimate within noise floor", c);
        cs.push_back(c);
    }
    ExponentFit out;
    out.fit = loglog_fit(ts, cs);
    out.slope = -out.fit.slope; // decay rate d
    out.slope_stderr = out.fit.slope_stderr;
    out.prefactor = std::exp(out.fit.intercept);
    out.abscissae = ts;
    out.ordinates = cs;
    out.inconclusive = out.slope_stderr > 0.3;
    return out;
}

} // namespace igsub
