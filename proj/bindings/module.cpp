#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "igsub/fbm.hpp"
#include "igsub/io.hpp"
#include "igsub/operators.hpp"
#include "igsub/specfun.hpp"
#include "igsub/stats.hpp"
#include "igsub/subordination.hpp"
#include "igsub/subordinator.hpp"
#include "igsub/verify.hpp"

namespace py = pybind11;
using namespace igsub;

#ifndef IGSUB_GIT_DESCRIBE
#define IGSUB_GIT_DESCRIBE "v0.1.0"
#endif

namespace {

SubordinatorSpec make_spec(const std::string& family, double alpha, double theta,
                           double epsilon, double beta0) {
    if (family == "plain") return SubordinatorSpec::plain(alpha, beta0);
    if (family == "tempered") return SubordinatorSpec::tempered(alpha, theta, beta0);
    if (family == "eps") return SubordinatorSpec::eps_floor(alpha, epsilon, beta0);
    throw std::invalid_argument("family must be plain|tempered|eps");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Subordinators built from the lower incomplete gamma function: "
              "exact samplers, special functions, fractional operators, and "
              "verification suites.";

    py::register_exception<convergence_error>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<infinite_moment_error>(m, "InfiniteMomentError",
                                                  PyExc_ValueError);
    py::register_exception<regime_error>(m, "RegimeError", PyExc_ValueError);

    // special functions
    m.def("gamma_complete", &gamma_complete, py::arg("a"));
    m.def("lower_inc_gamma",
          [](double a, double x) { return lower_inc_gamma(a, x); }, py::arg("a"),
          py::arg("x"));
    m.def("upper_inc_gamma",
          [](double a, double x) { return upper_inc_gamma(a, x); }, py::arg("a"),
          py::arg("x"));
    m.def("reg_inc_beta",
          [](double x, double a, double b) { return reg_inc_beta(x, a, b); }, py::arg("x"),
          py::arg("a"), py::arg("b"));
    m.def("kummer_1f1",
          [](double a, double c, double z) { return kummer_1f1(a, c, z); }, py::arg("a"),
          py::arg("c"), py::arg("z"));
    m.def("mittag_leffler3",
          [](double alpha, double beta, double gamma, double z) {
              return mittag_leffler3(alpha, beta, gamma, z);
          },
          py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("z"));
    m.def("quad_adaptive",
          [](const std::function<double(double)>& f, double lo, double hi) {
              return quad_adaptive(f, lo, hi);
          },
          py::arg("f"), py::arg("lo"), py::arg("hi"));

    // subordinator spec and paths
    py::class_<SubordinatorSpec>(m, "SubordinatorSpec")
        .def(py::init(&make_spec), py::arg("family") = "plain", py::arg("alpha") = 0.5,
             py::arg("theta") = 1.0, py::arg("epsilon") = 0.1, py::arg("beta0") = 0.0)
        .def_readonly("alpha", &SubordinatorSpec::alpha)
        .def_readonly("theta", &SubordinatorSpec::theta)
        .def_readonly("beta0", &SubordinatorSpec::beta0)
        .def_property_readonly("epsilon",
                               [](const SubordinatorSpec& s) {
                                   return s.epsilon ? py::cast(*s.epsilon)
                                                    : py::object(py::none());
                               })
        .def_property_readonly("family", [](const SubordinatorSpec& s) {
            switch (s.family()) {
                case Family::plain: return "plain";
                case Family::tempered: return "tempered";
                default: return "eps";
            }
        });

    py::class_<PathSample>(m, "PathSample")
        .def_readonly("horizon", &PathSample::horizon)
        .def_readonly("jump_times", &PathSample::jump_times)
        .def_readonly("jump_sizes", &PathSample::jump_sizes)
        .def_readonly("drift", &PathSample::drift)
        .def("__len__", &PathSample::jump_count)
        .def("evaluate_at", [](const PathSample& p, double t) { return evaluate_at(p, t); },
             py::arg("t"))
        .def("to_csv", &path_to_csv);

    m.def("laplace_exponent", &laplace_exponent, py::arg("spec"), py::arg("eta"));
    m.def("poisson_rate", &poisson_rate, py::arg("spec"));
    m.def("levy_density", &levy_density, py::arg("spec"), py::arg("z"));
    m.def("tempered_mean_var", &tempered_mean_var, py::arg("spec"), py::arg("t"));
    m.def("tail_asymptote", &tail_asymptote, py::arg("alpha"), py::arg("t"), py::arg("x"));
    m.def("frac_moment_asymptote", &frac_moment_asymptote, py::arg("alpha"), py::arg("p"),
          py::arg("t"));
    m.def(
        "sample_path",
        [](const SubordinatorSpec& spec, double horizon, std::uint64_t master_seed,
           std::uint64_t stream) {
            RngStream rng = RngStream::from_master(master_seed, stream);
            return sample_path(spec, horizon, rng);
        },
        py::arg("spec"), py::arg("horizon"), py::arg("master_seed"),
        py::arg("stream") = 0);
    m.def(
        "sample_jumps",
        [](const SubordinatorSpec& spec, std::size_t n, std::uint64_t master_seed) {
            RngStream rng(master_seed);
            std::vector<double> out(n);
            for (auto& z : out) z = sample_jump(spec, rng);
            return out;
        },
        py::arg("spec"), py::arg("n"), py::arg("master_seed"));

    // operators
    m.def("o_epsilon_transfer", &o_epsilon_transfer, py::arg("eta"), py::arg("epsilon"),
          py::arg("alpha"));
    m.def(
        "marchaud_approx",
        [](const std::function<double(double)>& g, double alpha, double epsilon, double x) {
            return marchaud_approx(g, alpha, epsilon, x);
        },
        py::arg("g"), py::arg("alpha"), py::arg("epsilon"), py::arg("x"));

    // subordinated Brownian motion
    m.def("bm_levy_density", &bm_levy_density, py::arg("x"), py::arg("alpha"),
          py::arg("theta") = 0.0);
    m.def("bm_autocovariance", &bm_autocovariance, py::arg("spec"), py::arg("t"),
          py::arg("tau"));
    m.def(
        "subordinated_bm_symbol",
        [](const SubordinatorSpec& spec, double u) {
            const auto psi = subordinate_symbol(LevySymbolDescriptor::brownian(), spec);
            return psi(u);
        },
        py::arg("spec"), py::arg("u"),
        "Levy symbol of Brownian motion under the time change, evaluated at u");

    // fbm
    m.def("fbm_abs_moment", &fbm_abs_moment, py::arg("H"), py::arg("q"), py::arg("t"));
    m.def(
        "sample_fbm_at",
        [](double hurst, const std::vector<double>& times, std::uint64_t master_seed) {
            RngStream rng(master_seed);
            const auto p = sample_fbm_at(hurst, times, rng);
            return std::make_pair(p.times, p.values);
        },
        py::arg("H"), py::arg("times"), py::arg("master_seed"));
    m.def(
        "estimate_variance_exponent",
        [](double hurst, double alpha, const std::vector<double>& t_grid, std::size_t n,
           std::uint64_t seed, int threads) {
            const auto fit = estimate_variance_exponent(hurst, alpha, t_grid, n, seed, threads);
            py::dict d;
            d["slope"] = fit.slope;
            d["slope_stderr"] = fit.slope_stderr;
            d["prefactor"] = fit.prefactor;
            d["t"] = fit.abscissae;
            d["value"] = fit.ordinates;
            d["inconclusive"] = fit.inconclusive;
            return d;
        },
        py::arg("H"), py::arg("alpha"), py::arg("t_grid"), py::arg("n_paths"),
        py::arg("master_seed"), py::arg("threads") = 1);
    m.def(
        "estimate_lrd_exponent",
        [](double hurst, double alpha, double s, const std::vector<double>& t_grid,
           std::size_t n, std::uint64_t seed, int threads) {
            const auto fit = estimate_lrd_exponent(hurst, alpha, s, t_grid, n, seed, threads);
            py::dict d;
            d["d"] = fit.slope;
            d["slope_stderr"] = fit.slope_stderr;
            d["prefactor"] = fit.prefactor;
            d["t"] = fit.abscissae;
            d["value"] = fit.ordinates;
            d["inconclusive"] = fit.inconclusive;
            return d;
        },
        py::arg("H"), py::arg("alpha"), py::arg("s"), py::arg("t_grid"), py::arg("n_paths"),
        py::arg("master_seed"), py::arg("threads") = 1);

    // verification suites
    m.def("suite_names", [] { return suite_names(); });
    m.def(
        "run_suite_json",
        [](const std::string& name, std::uint64_t master_seed, int threads,
           double tolerance_scale, std::size_t paths_override) {
            VerifyConfig cfg;
            cfg.master_seed = master_seed;
            cfg.threads = threads;
            cfg.tolerance_scale = tolerance_scale;
            cfg.paths_override = paths_override;
            return report_to_json(run_suite(name, cfg));
        },
        py::arg("name"), py::arg("master_seed") = 20260809ULL, py::arg("threads") = 1,
        py::arg("tolerance_scale") = 1.0, py::arg("paths_override") = 0,
        "Run a verification suite and return its JSON report");

    m.attr("__version__") = IGSUB_GIT_DESCRIBE;
}
