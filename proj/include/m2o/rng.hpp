#pragma once

#include <cstdint>
#include <cmath>

namespace m2o {

// SplitMix64 finalizer. Bijective on 64-bit words; used both as a mixing
// function for deriving substream seeds and as the generator step.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seeded stream of pseudo-random draws. Distinct (seed, stream) pairs give
// independent sequences; the same pair reproduces the same sequence bit for
// bit, which is what every Monte Carlo path in this project relies on.
class RngStream {
public:
    explicit RngStream(uint64_t seed, uint64_t stream = 0)
        : state_(mix64(seed ^ mix64(stream ^ 0x5851f42d4c957f2dULL))) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Uniform on the open interval (0,1); never returns an exact endpoint.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Inverse-CDF exponential: -mean * ln(1-U).
    double next_exp(double mean = 1.0) {
        return -mean * std::log1p(-next_unit());
    }

    uint64_t next_below(uint64_t n) { return next_u64() % n; }

private:
    uint64_t state_;
};

// Fixed stream ids so that unrelated draws never share a sequence.
namespace stream {
inline constexpr uint64_t weights = 1;
inline constexpr uint64_t trials = 2;
inline constexpr uint64_t labels = 3;
inline constexpr uint64_t pool = 4;
inline constexpr uint64_t pwit = 5;
}  // namespace stream

// Per-trial seed derivation: seed XOR trial index pushed through the mixer,
// so any sub-range of trials reproduces the rows of a larger sweep.
inline uint64_t trial_seed(uint64_t seed, uint64_t trial_index) {
    return mix64(seed ^ trial_index);
}

}  // namespace m2o
