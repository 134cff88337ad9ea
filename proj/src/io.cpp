#include "igsub/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace igsub {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string path_to_csv(const PathSample& path) {
    std::string out = "jump_time,jump_size\n";
    for (std::size_t i = 0; i < path.jump_times.size(); ++i) {
        out += format_double(path.jump_times[i]);
        out += ',';
        out += format_double(path.jump_sizes[i]);
        out += '\n';
    }
    return out;
}

namespace {

ordered_json spec_to_json(const SubordinatorSpec& spec) {
    ordered_json j;
    switch (spec.family()) {
        case Family::plain: j["family"] = "plain"; break;
        case Family::tempered: j["family"] = "tempered"; break;
        case Family::eps_floor: j["family"] = "eps"; break;
    }
    j["alpha"] = spec.alpha;
    j["theta"] = spec.theta;
    if (spec.epsilon)
        j["epsilon"] = *spec.epsilon;
    else
        j["epsilon"] = nullptr;
    j["beta0"] = spec.beta0;
    return j;
}

} // namespace

std::string path_to_json(const PathSample& path, const SubordinatorSpec& spec,
                         std::uint64_t master_seed, std::uint64_t stream_index) {
    ordered_json j;
    j["spec"] = spec_to_json(spec);
    j["master_seed"] = master_seed;
    j["stream_index"] = stream_index;
    j["horizon"] = path.horizon;
    j["drift"] = path.drift;
    auto jumps = ordered_json::array();
    for (std::size_t i = 0; i < path.jump_times.size(); ++i)
        jumps.push_back({path.jump_times[i], path.jump_sizes[i]});
    j["jumps"] = std::move(jumps);
    return j.dump();
}

std::string time_changed_to_csv(const TimeChangedPath& path) {
    std::string out = "t,inner_clock,value\n";
    for (std::size_t i = 0; i < path.time_grid.size(); ++i) {
        out += format_double(path.time_grid[i]);
        out += ',';
        out += format_double(path.inner_clock[i]);
        out += ',';
        out += format_double(path.outer_values[i]);
        out += '\n';
    }
    return out;
}

std::string density_to_csv(const std::vector<double>& xs, const std::vector<double>& nu) {
    if (xs.size() != nu.size()) throw std::invalid_argument("density_to_csv: size mismatch");
    std::string out = "x,nu_prime\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += format_double(xs[i]);
        out += ',';
        out += format_double(nu[i]);
        out += '\n';
    }
    return out;
}

std::string table_to_csv(const std::string& value_name, const std::vector<double>& ts,
                         const std::vector<double>& values) {
    if (ts.size() != values.size()) throw std::invalid_argument("table_to_csv: size mismatch");
    std::string out = "t," + value_name + "\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
        out += format_double(ts[i]);
        out += ',';
        out += format_double(values[i]);
        out += '\n';
    }
    return out;
}

std::string exponent_report_json(const std::string& kind, double hurst, double alpha,
                                 const ExponentFit& fit, std::size_t n_paths,
                                 std::uint64_t master_seed) {
    ordered_json j;
    j["kind"] = kind;
    j["H"] = hurst;
    j["alpha"] = alpha;
    j["slope"] = fit.slope;
    j["slope_stderr"] = fit.slope_stderr;
    j["prefactor"] = fit.prefactor;
    j["r_squared"] = fit.fit.r_squared;
    j["n_paths"] = n_paths;
    j["master_seed"] = master_seed;
    j["t"] = fit.abscissae;
    j["value"] = fit.ordinates;
    j["inconclusive"] = fit.inconclusive;
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_file: cannot open " + path);
    f << contents;
    if (!f) throw std::runtime_error("write_file: write failed for " + path);
}

} // namespace igsub
