#pragma once
// Deterministic 64-bit RNG for every sampled quantity in the library.
//
// SplitMix64 (Steele/Lea/Flood mixer) is used instead of <random> engines
// because its output is a pure function of (seed, call index) with no
// platform-dependent state layout: reports regenerated from the same seed are
// byte-identical across compilers, which the determinism tests assert.
// Uniform doubles use the conventional 53-bit mantissa mapping.

#include <cmath>
#include <cstdint>

namespace zaremba {

struct splitmix64 {
    std::uint64_t state;

    explicit splitmix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    // uniform in (0, 1]; safe as a log() argument
    double uniform_pos() { return double((next() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller; one Gaussian per call (the sibling value is discarded so the
    // consumption pattern stays trivially reproducible).
    double gaussian() {
        double u = uniform_pos();
        double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * 3.14159265358979323846 * v);
    }
};

// Deterministic per-batch sub-seed: Monte-Carlo loops draw one sub-stream per
// batch so a parallel fan-out over batches would reproduce the serial result.
inline std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t batch) {
    splitmix64 g(seed + 0x9e3779b97f4a7c15ULL * (batch + 1));
    return g.next();
}

}  // namespace zaremba
