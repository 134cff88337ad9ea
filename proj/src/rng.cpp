#include "igsub/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace igsub {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

RngStream::RngStream(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : state_) w = splitmix64(sm);
}

RngStream RngStream::from_master(std::uint64_t master_seed, std::uint64_t stream_index) {
    std::uint64_t sm = master_seed;
    std::uint64_t base = splitmix64(sm);
    return RngStream(base + (stream_index + 1) * 0x9E3779B97F4A7C15ULL);
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::uniform01() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngStream::uniform_co() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::exponential() {
    return -std::log(uniform01());
}

double RngStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform01()));
    const double phi = 6.283185307179586476925286766559 * uniform_co();
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
}

std::uint64_t RngStream::poisson(double mean) {
    if (!(mean >= 0.0)) throw std::domain_error("poisson: mean must be >= 0");
    if (mean == 0.0) return 0;
    std::uint64_t k = 0;
    double acc = exponential();
    while (acc <= mean) {
        ++k;
        acc += exponential();
    }
    return k;
}

// Ahrens-Dieter GS rejection sampler for shape < 1.
double RngStream::gamma_lt1(double shape) {
    if (!(shape > 0.0 && shape <= 1.0))
        throw std::domain_error("gamma_lt1: shape must be in (0,1]");
    if (shape == 1.0) return exponential();
    const double b = 1.0 + shape * 0.36787944117144233;
    for (;;) {
        const double p = b * uniform01();
        if (p <= 1.0) {
            const double x = std::pow(p, 1.0 / shape);
            if (uniform01() <= std::exp(-x)) return x;
        } else {
            const double x = -std::log((b - p) / shape);
            if (uniform01() <= std::pow(x, shape - 1.0)) return x;
        }
    }
}

double RngStream::beta(double a, double b) {
    const double g1 = gamma_lt1(a);
    const double g2 = gamma_lt1(b);
    return g1 / (g1 + g2);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view label) {
    // FNV-1a over the label, then one splitmix round against the master.
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    std::uint64_t sm = master_seed ^ h;
    return splitmix64(sm);
}

} // namespace igsub
