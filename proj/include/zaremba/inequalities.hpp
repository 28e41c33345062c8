#pragma once
// Quermassintegral inequality checks for convex bodies: the radius chain
// coming from the Alexandrov-Fenchel inequalities, the two-sided bounds on
// perimeters of inner/outer parallel bodies against matched balls, and the
// lower bound on the derivative of the inner-parallel perimeter.  Each check
// returns a sampled report (parameter, lhs, rhs, slack) with a verdict.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "zaremba/common.hpp"
#include "zaremba/geometry.hpp"
#include "zaremba/rng.hpp"

namespace zaremba {

struct inequality_sample {
    double parameter = 0.0;  // delta, t, or chain index
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // signed margin, >= -tolerance means the sample passes
};

struct inequality_report {
    std::string name;
    std::vector<inequality_sample> samples;
    double tolerance = 0.0;
    bool pass = true;
    std::vector<double> extra;  // check-specific values (e.g. the radius chain)

    void add_sample(double parameter, double lhs, double rhs, double slack) {
        samples.push_back({parameter, lhs, rhs, slack});
    }
    double worst_slack() const {
        double w = std::numeric_limits<double>::infinity();
        for (const auto& s : samples) w = std::min(w, s.slack);
        return w;
    }
};

// Radii (W_j(K)/omega_n)^{1/(n-j)} are nondecreasing in j; equality
// throughout iff K is a ball.  Samples are indexed by j with lhs = r_j,
// rhs = r_{j+1}; extra holds the full chain r_0..r_{n-1}.
inline inequality_report check_alexandrov_fenchel(const convex_body& K, double tol = 1e-9) {
    const int n = K.dim;
    const double wn = unit_ball_volume(n);
    auto Q = compute_quermassintegrals(K);
    inequality_report rep;
    rep.name = "alexandrov_fenchel_chain";
    rep.tolerance = tol;
    std::vector<double> radii(n);
    for (int j = 0; j < n; ++j) radii[j] = std::pow(Q.w[j] / wn, 1.0 / (n - j));
    rep.extra = radii;
    for (int j = 0; j + 1 < n; ++j) {
        double slack = radii[j + 1] - radii[j];
        rep.add_sample(static_cast<double>(j), radii[j], radii[j + 1], slack);
        if (slack < -tol) rep.pass = false;
    }
    return rep;
}

namespace detail {

inline std::vector<double> default_inner_deltas(const convex_body& K) {
    double r = inradius(K);
    return log_spaced(0.01 * r, 0.99 * r, 16);
}

}  // namespace detail

// Perimeter of the inner parallel body K_{-delta} is dominated by the
// perimeter of the shrunk ball of equal perimeter: P(K_{-delta}) <=
// n omega_n (R# - delta)^{n-1} for 0 < delta < inradius.
inline inequality_report check_nagy_inner(const convex_body& K,
                                          std::vector<double> deltas = {},
                                          double tol = 1e-9) {
    const int n = K.dim;
    const double r = inradius(K);
    if (deltas.empty()) deltas = detail::default_inner_deltas(K);
    const double Rsharp = reference_ball(K, ball_rule::perimeter).radius;
    inequality_report rep;
    rep.name = "inner_parallel_perimeter";
    rep.tolerance = tol;
    for (double d : deltas) {
        if (!(d > 0.0) || !(d < r))
            throw error("invalid-delta", "inner offsets must lie in (0, inradius)");
        double lhs = perimeter(inner_parallel_body(K, d));
        double rhs = sphere_area(n) * std::pow(Rsharp - d, n - 1);
        double slack = rhs - lhs;
        rep.add_sample(d, lhs, rhs, slack);
        if (slack < -tol) rep.pass = false;
    }
    return rep;
}

enum class outer_mode {
    reverse_perimeter,  // P(K_delta) >= n omega_n (R# + delta)^{n-1}, dim >= 3
    quermass,           // P(K_delta) <= n omega_n (R* + delta)^{n-1}, exact for dim 2
};

inline std::string to_string(outer_mode m) {
    return m == outer_mode::reverse_perimeter ? "reverse_perimeter" : "quermass";
}

// Perimeter of the outer parallel body K_delta against matched balls.  In
// reverse_perimeter mode the equal-perimeter ball is a lower bound (this is
// the reverse inequality; it needs dim >= 3).  In quermass mode the ball of
// radius W_{n-1}/omega_n is an upper bound, with equality identically in
// dim 2 where the check becomes |slack| <= 1e-12.
inline inequality_report check_nagy_outer(const convex_body& K,
                                          std::vector<double> deltas = {},
                                          outer_mode mode = outer_mode::reverse_perimeter,
                                          double tol = 1e-9) {
    const int n = K.dim;
    if (mode == outer_mode::reverse_perimeter && n < 3)
        throw error("unsupported-dimension",
                    "the reverse outer-perimeter bound needs dim >= 3");
    if (deltas.empty()) deltas = log_spaced(0.01, 2.0 * diameter(K), 16);
    const bool exact2d = (mode == outer_mode::quermass && n == 2);
    const double ball_radius =
        reference_ball(K, mode == outer_mode::reverse_perimeter ? ball_rule::perimeter
                                                                : ball_rule::quermass)
            .radius;
    inequality_report rep;
    rep.name = mode == outer_mode::reverse_perimeter ? "reverse_outer_perimeter"
                                                     : "outer_quermass_perimeter";
    rep.tolerance = exact2d ? 1e-12 : tol;
    for (double d : deltas) {
        if (!(d > 0.0)) throw error("invalid-delta", "outer offsets must be positive");
        double lhs = steiner_outer_offset(K, d).perimeter;
        double rhs = sphere_area(n) * std::pow(ball_radius + d, n - 1);
        double slack = mode == outer_mode::reverse_perimeter ? lhs - rhs : rhs - lhs;
        rep.add_sample(d, lhs, rhs, slack);
        // the identity margin scales with the compared magnitudes: 1e-12
        // absolute at unit scale, 12 digits on large offsets of large bodies
        double margin = exact2d ? rep.tolerance * std::max({1.0, lhs, rhs}) : rep.tolerance;
        if (exact2d ? std::fabs(slack) > margin : slack < -margin) rep.pass = false;
    }
    return rep;
}

// -d/dt P(K_{-t}) >= n(n-1) W_2(K_{-t}), sampled by a central difference of
// half-width h.  Auto-chosen stencils skip offsets where the erosion changes
// its facet structure inside the stencil (the perimeter has a kink there and
// the difference quotient is meaningless).
inline inequality_report check_inner_derivative(const convex_body& K,
                                                std::vector<double> ts = {},
                                                double h = -1.0, double tol = 1e-4) {
    const int n = K.dim;
    const double r = inradius(K);
    if (h <= 0.0) h = std::min(0.01, 0.1 * r);
    const bool auto_ts = ts.empty();
    if (auto_ts) ts = log_spaced(0.01 * r, 0.99 * r, 16);
    inequality_report rep;
    rep.name = "perimeter_derivative_bound";
    rep.tolerance = tol;
    for (double t : ts) {
        if (t - h <= 0.0 || t + h >= r) {
            if (auto_ts) continue;
            throw error("invalid-stencil",
                        "difference stencil must stay inside (0, inradius)");
        }
        auto lo = inner_parallel_body(K, t - h);
        auto hi = inner_parallel_body(K, t + h);
        if (auto_ts && (lo.facets.size() != hi.facets.size() ||
                        lo.vertices.size() != hi.vertices.size()))
            continue;  // combinatorial change inside the stencil
        double lhs = -(perimeter(hi) - perimeter(lo)) / (2.0 * h);
        auto Q = compute_quermassintegrals(inner_parallel_body(K, t));
        double rhs = static_cast<double>(n) * (n - 1) * Q.w[2];
        double slack = lhs - rhs;
        rep.add_sample(t, lhs, rhs, slack);
        if (slack < -tol) rep.pass = false;
    }
    return rep;
}

// Random polytope circumscribed about the unit sphere (one tangent halfspace
// per uniform direction), then rescaled by a uniform factor in [0.5, 2]; the
// inradius equals the scale factor exactly.  Degenerate draws are retried.
inline convex_body random_convex_polytope(int dim, int facet_count, splitmix64& rng) {
    if (dim < 2 || dim > 3) throw error("unsupported-dimension", "polytopes support dim 2 or 3");
    if (facet_count < dim + 1)
        throw error("invalid-input", "need at least dim+1 facets");
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<facet> facets(facet_count);
        for (auto& f : facets) {
            f.normal.resize(dim);
            double nn = 0.0;
            for (int d = 0; d < dim; ++d) {
                f.normal[d] = rng.gaussian();
                nn += f.normal[d] * f.normal[d];
            }
            nn = std::sqrt(nn);
            if (nn < 1e-12) {
                f.normal.assign(dim, 0.0);
                f.normal[0] = 1.0;
                nn = 1.0;
            }
            for (int d = 0; d < dim; ++d) f.normal[d] /= nn;
            f.offset = 1.0;
        }
        double scale = rng.uniform(0.5, 2.0);
        for (auto& f : facets) f.offset *= scale;
        try {
            return make_polytope(facets);
        } catch (const error&) {
            continue;  // unbounded or degenerate draw, resample
        }
    }
    throw error("generation-failure", "could not generate a valid random polytope");
}

}  // namespace zaremba
