#pragma once
// Monte Carlo volume estimation over axis-aligned bounding boxes.  Batches
// are seeded independently so estimates are reproducible for a given
// (seed, samples) pair regardless of batching.

#include <cmath>
#include <cstdint>
#include <vector>

#include "zaremba/common.hpp"
#include "zaremba/domain.hpp"
#include "zaremba/geometry.hpp"
#include "zaremba/rng.hpp"

namespace zaremba {

inline constexpr std::uint64_t mc_batch_size = 65536;
inline constexpr std::uint64_t mc_min_samples = 10000;

// Point membership for the shell: closed outer body, open complement of the
// inner body (boundary points of the hole count as outside the shell).
inline bool in_shell(const domain_spec& dom, const std::vector<double>& x) {
    if (!contains(dom.outer, x)) return false;
    if (dom.inner && boundary_clearance(*dom.inner, x) > 0.0) return false;
    return true;
}

struct mc_volume {
    double estimate = 0.0;
    double standard_error = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
    bool degenerate = false;  // zero hits: estimate 0 with no error bar
};

// Hit-or-miss estimate of the measure of {x in bbox : region(x)}.
template <class Predicate>
mc_volume mc_region_volume(const Predicate& region, const std::vector<double>& lo,
                           const std::vector<double>& hi, std::uint64_t samples,
                           std::uint64_t seed) {
    if (lo.size() != hi.size() || lo.empty()) throw error("invalid-input", "bad bounding box");
    if (samples < mc_min_samples)
        throw error("insufficient-samples", "Monte Carlo needs at least 10^4 samples");
    const int dim = static_cast<int>(lo.size());
    double box_vol = 1.0;
    for (int d = 0; d < dim; ++d) {
        if (!(hi[d] > lo[d])) throw error("invalid-input", "bad bounding box");
        box_vol *= hi[d] - lo[d];
    }
    std::uint64_t hits = 0;
    std::vector<double> x(dim);
    const std::uint64_t batches = (samples + mc_batch_size - 1) / mc_batch_size;
    for (std::uint64_t b = 0; b < batches; ++b) {
        splitmix64 rng(batch_seed(seed, b));
        const std::uint64_t count =
            (b + 1 == batches) ? samples - b * mc_batch_size : mc_batch_size;
        for (std::uint64_t i = 0; i < count; ++i) {
            for (int d = 0; d < dim; ++d) x[d] = rng.uniform(lo[d], hi[d]);
            if (region(x)) ++hits;
        }
    }
    mc_volume out;
    out.hits = hits;
    out.samples = samples;
    const double f = static_cast<double>(hits) / static_cast<double>(samples);
    out.estimate = box_vol * f;
    if (hits == 0) {
        out.degenerate = true;  // report zero measure rather than failing
        return out;
    }
    out.standard_error = box_vol * std::sqrt(f * (1.0 - f) / static_cast<double>(samples));
    return out;
}

inline mc_volume mc_region_volume(const domain_spec& dom, std::uint64_t samples,
                                  std::uint64_t seed) {
    auto [lo, hi] = bounding_box(dom.outer);
    return mc_region_volume([&dom](const std::vector<double>& x) { return in_shell(dom, x); },
                            lo, hi, samples, seed);
}

}  // namespace zaremba
