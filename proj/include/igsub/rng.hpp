#pragma once

#include <cstdint>
#include <string_view>

#include "igsub/common.hpp"

namespace igsub {

/// xoshiro256++ with SplitMix64 seeding. Self-contained so that streams are
/// bit-reproducible across platforms and standard-library versions, which the
/// reporting layer relies on (identical seeds must reproduce identical files).
///
/// Streams are derived counter-style: (master_seed, stream_index) selects an
/// independent stream, so Monte Carlo loops can assign stream i to path i and
/// stay deterministic under any parallel schedule.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    static RngStream from_master(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t next_u64();

    /// Uniform on (0,1]; never returns 0, so log() is always safe.
    double uniform01();
    /// Uniform on [0,1).
    double uniform_co();

    double exponential();               // rate 1
    double normal();                    // standard normal (Box-Muller, cached spare)
    std::uint64_t poisson(double mean); // exponential-race construction, exact
    double gamma_lt1(double shape);     // Gamma(shape,1), 0 < shape <= 1
    double beta(double a, double b);    // Beta(a,b) as G_a/(G_a+G_b), a,b in (0,1]

private:
    std::uint64_t state_[4];
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Derives a sub-master seed from a master seed and a textual label, so
/// distinct experiments within one run consume unrelated stream families.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view label);

} // namespace igsub
