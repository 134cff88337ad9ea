#pragma once

#include <cstdint>
#include <string>

#include "igsub/fbm.hpp"
#include "igsub/subordination.hpp"
#include "igsub/subordinator.hpp"

namespace igsub {

/// Shortest round-trip decimal rendering ('.' decimal point, no locale).
std::string format_double(double v);

/// CSV with header "jump_time,jump_size", one row per jump, '\n' line ends,
/// newline-terminated.
std::string path_to_csv(const PathSample& path);

/// Compact JSON record of a path: the generating spec, seed provenance,
/// horizon, drift, and the jump list.
std::string path_to_json(const PathSample& path, const SubordinatorSpec& spec,
                         std::uint64_t master_seed, std::uint64_t stream_index);

/// CSV with header "t,inner_clock,value".
std::string time_changed_to_csv(const TimeChangedPath& path);

/// CSV with header "x,nu_prime" from parallel abscissa/density arrays.
std::string density_to_csv(const std::vector<double>& xs, const std::vector<double>& nu);

/// CSV with header "t,<value_name>" for estimator tables.
std::string table_to_csv(const std::string& value_name, const std::vector<double>& ts,
                         const std::vector<double>& values);

/// JSON exponent report (H, alpha, slope, stderr, n_paths, seed).
std::string exponent_report_json(const std::string& kind, double hurst, double alpha,
                                 const ExponentFit& fit, std::size_t n_paths,
                                 std::uint64_t master_seed);

void write_file(const std::string& path, const std::string& contents);

} // namespace igsub
