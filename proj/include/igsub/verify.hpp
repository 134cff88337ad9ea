#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "igsub/common.hpp"

namespace igsub {

/// Runtime knobs shared by every verification suite. tolerance_scale
/// multiplies every acceptance band (useful for quick smoke runs);
/// paths_override replaces the suite's default path count when nonzero.
struct VerifyConfig {
    std::uint64_t master_seed = 20260809ULL;
    int threads = 1;
    double tolerance_scale = 1.0;
    std::size_t paths_override = 0;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;   // |measured - expected| allowance actually applied
    double stderr_val = 0.0;  // Monte Carlo standard error where applicable
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t master_seed = 0;
    double tolerance_scale = 1.0;
    std::size_t n_paths = 0; // 0 for purely analytic suites
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t passed() const;
};

/// Names accepted by run_suite, in execution order of the acceptance gate.
const std::vector<std::string>& suite_names();

/// Runs one named verification suite. Throws std::invalid_argument for an
/// unknown name; propagates regime_error and friends for configurations the
/// theory refuses.
SuiteReport run_suite(const std::string& name, const VerifyConfig& config);

/// Deterministic JSON rendering of a report (byte-identical across reruns
/// with the same seed).
std::string report_to_json(const SuiteReport& report);

} // namespace igsub
