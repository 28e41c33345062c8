#pragma once
// Parallel-set profiles of shell domains and the majorization lemmas that
// compare them against matched annuli.
//
// For a shell Omega = Outer \ closure(Inner) and a chosen boundary side, the
// depth of a point is its distance from that boundary (inward clearance for
// the outer boundary, distance to the inner body for the inner one).  The
// profile v(delta) = |{x in Omega : depth(x) <= delta}| is estimated by Monte
// Carlo on a uniform depth grid, snapped to |Omega| at the deepest point, and
// fitted with a monotone cubic anchored to v'(0) = P_D, the perimeter of the
// profiled boundary; s(delta) = v'(delta) is the boundary measure at depth
// delta.  Concentric ball shells bypass sampling: their profiles are
// closed-form.
//
// The outer-side lemma compares boundary measures at equal swept volume:
// with alpha in [0, |Omega|], h(alpha) = s(v^{-1}(alpha)) must stay below
// H(alpha) = S_A(V_A^{-1}(alpha)), and the maximal depth must reach at least
// the annulus width.  The inner-side lemma works in the time coordinate
// t(delta) = int_0^delta s^{1-p'} and requires g(alpha) = s(t^{-1}(alpha))
// to stay below G(alpha) = S_A(T^{-1}(alpha)) on [0, T#], together with the
// horizon inequalities and the normalization int_0^{t*} g^{p'} = |Omega|.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "zaremba/common.hpp"
#include "zaremba/domain.hpp"
#include "zaremba/inequalities.hpp"
#include "zaremba/montecarlo.hpp"
#include "zaremba/pchip.hpp"
#include "zaremba/rng.hpp"

namespace zaremba {

// np.interp-style piecewise-linear interpolation with flat extrapolation.
// xs must be nondecreasing; ties are resolved by taking the last run entry.
inline double interp(double x, const std::vector<double>& xs, const std::vector<double>& ys) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t i = std::size_t(it - xs.begin()) - 1;
    double w = (x - xs[i]) / (xs[i + 1] - xs[i]);
    return ys[i] + w * (ys[i + 1] - ys[i]);
}

struct side_profile {
    boundary_side side = boundary_side::inner;
    int dim = 0;
    double omega_volume = 0.0;       // |Omega|, exact
    double dirichlet_perimeter = 0;  // P_D of the profiled boundary, exact
    double tstar = 0.0;              // maximal depth
    std::vector<double> delta;       // uniform grid, delta[0] = 0, delta.back() = tstar
    std::vector<double> v;           // volume profile on the grid
    pchip fit;                       // monotone fit with v'(0) = P_D

    bool exact = false;              // concentric ball shell: closed forms below
    double ball_r = 0.0, ball_R = 0.0;

    long long hits = 0;              // Monte-Carlo bookkeeping (0 when exact)
    long long samples = 0;
    std::vector<double> depth_sorted;

    double spacing() const { return delta.size() > 1 ? delta[1] - delta[0] : 0.0; }

    // boundary measure at depth d (clamped derivative of the fit)
    double s(double d) const {
        if (d <= 0.0) return dirichlet_perimeter;
        d = std::min(d, tstar);
        if (exact) {
            double rho = side == boundary_side::inner ? ball_r + d : ball_R - d;
            return sphere_area(dim) * std::pow(rho, dim - 1);
        }
        return std::max(fit.deriv(d), 0.0);
    }

    double volume_at(double d) const {
        if (d <= 0.0) return 0.0;
        if (d >= tstar) return omega_volume;
        if (exact) {
            double wn = unit_ball_volume(dim);
            return side == boundary_side::inner
                       ? wn * (std::pow(ball_r + d, dim) - std::pow(ball_r, dim))
                       : wn * (std::pow(ball_R, dim) - std::pow(ball_R - d, dim));
        }
        return std::clamp(fit.eval(d), 0.0, omega_volume);
    }

    // empirical CDF of sampled depths
    double cdf(double d) const {
        if (depth_sorted.empty()) return 0.0;
        auto it = std::upper_bound(depth_sorted.begin(), depth_sorted.end(), d);
        return double(it - depth_sorted.begin()) / double(depth_sorted.size());
    }

    double sigma_v(double d) const {
        if (exact) return 0.0;
        double F = cdf(d);
        return omega_volume * std::sqrt(F * (1.0 - F) / double(hits));
    }

    // binomial noise of the fitted slope over one grid cell
    double sigma_s(double d) const {
        if (exact) return 0.0;
        double dl = spacing();
        double fc = cdf(std::min(d + dl / 2, tstar)) - cdf(std::max(d - dl / 2, 0.0));
        return 1.5 * omega_volume * std::sqrt(fc * (1.0 - fc) / double(hits)) / dl;
    }

    // local curvature proxy: slope change across one grid cell
    double bias_s(double d) const {
        if (exact) return 0.0;
        double dl = spacing();
        return std::fabs(s(d + dl) - s(d - dl));
    }

    // pointwise comparison tolerance for s(d) against an exact curve
    double s_tolerance(double d) const { return 4.0 * sigma_s(d) + bias_s(d) + 1e-9; }
};

namespace detail {

inline double point_depth(const domain_spec& dom, boundary_side side,
                          const std::vector<double>& x) {
    return side == boundary_side::outer ? boundary_clearance(dom.outer, x)
                                        : distance_to_body(*dom.inner, x);
}

// Exact candidates for the maximal depth.  Inner side: the distance to the
// inner body is convex, so its maximum over the outer hull sits at an extreme
// point (closed form for ball-in-ball).  Outer side: the clearance is concave;
// either the Chebyshev center of the outer body survives in Omega, or the
// maximizer hugs the inner boundary, probed at vertices and at facet
// projections of the Chebyshev center.
inline double tstar_candidates(const domain_spec& dom, boundary_side side) {
    const auto& out = dom.outer;
    const int dim = out.dim;
    double best = 0.0;
    if (side == boundary_side::inner) {
        const auto& in = *dom.inner;
        if (out.kind == body_kind::ball) {
            if (in.kind == body_kind::ball) {
                double d2 = 0;
                for (int d = 0; d < dim; ++d) d2 += sqr(out.center[d] - in.center[d]);
                return std::sqrt(d2) + out.radius - in.radius;
            }
            auto zs = extreme_points(in);
            zs.push_back(chebyshev_ball(in).center);
            for (const auto& z : zs) {
                std::vector<double> u(dim);
                double len = 0;
                for (int d = 0; d < dim; ++d) {
                    u[d] = out.center[d] - z[d];
                    len += u[d] * u[d];
                }
                len = std::sqrt(len);
                std::vector<double> x(dim);
                for (int d = 0; d < dim; ++d)
                    x[d] = out.center[d] + (len > 1e-12 ? out.radius * u[d] / len
                                                        : (d == 0 ? out.radius : 0.0));
                best = std::max(best, distance_to_body(in, x));
            }
            return best;
        }
        for (const auto& vtx : extreme_points(out))
            best = std::max(best, distance_to_body(in, vtx));
        return best;
    }
    // outer side
    inball cb = chebyshev_ball(out);
    if (!dom.inner) return cb.radius;
    const auto& in = *dom.inner;
    if (!(boundary_clearance(in, cb.center) > 0.0)) best = cb.radius;
    std::vector<std::vector<double>> cands;
    if (in.kind == body_kind::ball) {
        std::vector<double> u(dim);
        double len = 0;
        for (int d = 0; d < dim; ++d) {
            u[d] = cb.center[d] - in.center[d];
            len += u[d] * u[d];
        }
        len = std::sqrt(len);
        std::vector<double> pnt(dim);
        for (int d = 0; d < dim; ++d)
            pnt[d] = in.center[d] +
                     (len > 1e-12 ? in.radius * u[d] / len : (d == 0 ? in.radius : 0.0));
        cands.push_back(pnt);
    } else {
        cands = extreme_points(in);
        if (in.kind == body_kind::box) {
            for (int d = 0; d < dim; ++d) {
                for (int hi_side = 0; hi_side < 2; ++hi_side) {
                    std::vector<double> pnt(dim);
                    for (int e = 0; e < dim; ++e)
                        pnt[e] = std::clamp(cb.center[e], in.lo[e], in.hi[e]);
                    pnt[d] = hi_side ? in.hi[d] : in.lo[d];
                    cands.push_back(pnt);
                }
            }
        } else {
            for (const auto& f : in.facets) {
                double sdist = dot(f.normal, cb.center) - f.offset;
                std::vector<double> pnt(dim);
                for (int d = 0; d < dim; ++d) pnt[d] = cb.center[d] - sdist * f.normal[d];
                if (contains(in, pnt, 1e-9)) cands.push_back(pnt);
            }
        }
    }
    for (const auto& pnt : cands)
        if (contains(out, pnt, 0.0)) best = std::max(best, boundary_clearance(out, pnt));
    return best;
}

// Trapezoid accumulation of weight^{1-p'} along a depth grid.  Shared by the
// domain-time and annulus-time tables so that a closed-form profile and its
// matching annulus produce bit-identical accumulations.
template <class Weight>
std::vector<double> accumulate_time(const std::vector<double>& xs, const Weight& w,
                                    double pprime, double floor_fraction) {
    std::vector<double> wv(xs.size());
    double wmax = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        wv[i] = w(xs[i]);
        wmax = std::max(wmax, wv[i]);
    }
    std::vector<double> t(xs.size(), 0.0);
    auto f = [&](std::size_t i) {
        return wv[i] > floor_fraction * wmax ? std::pow(wv[i], 1.0 - pprime) : 0.0;
    };
    for (std::size_t i = 1; i < xs.size(); ++i)
        t[i] = t[i - 1] + 0.5 * (f(i - 1) + f(i)) * (xs[i] - xs[i - 1]);
    return t;
}

}  // namespace detail

inline side_profile fit_profile(const domain_spec& dom, boundary_side side, int grid_size,
                                long long nsamples, std::uint64_t seed) {
    if (grid_size < 8) throw error("invalid-input", "profile grid needs at least 8 cells");
    if (side == boundary_side::inner && !dom.inner)
        throw error("invalid-input", "inner-side profile needs an inner body");
    side_profile pr;
    pr.side = side;
    pr.dim = dom.outer.dim;
    pr.omega_volume = domain_volume(dom);
    pr.dirichlet_perimeter =
        side == boundary_side::inner ? perimeter(*dom.inner) : perimeter(dom.outer);

    if (auto conc = as_concentric_annulus(dom)) {
        pr.exact = true;
        pr.ball_r = conc->r;
        pr.ball_R = conc->R;
        pr.tstar = pr.ball_R - pr.ball_r;
        pr.delta = linspace(0.0, pr.tstar, grid_size + 1);
        for (double d : pr.delta) pr.v.push_back(pr.volume_at(d));
        pr.v.back() = pr.omega_volume;
        double anchor = pr.dirichlet_perimeter;
        pr.fit = pchip::fit(pr.delta, pr.v, &anchor);
        return pr;
    }

    if (nsamples < (long long)mc_min_samples)
        throw error("insufficient-samples", "profile fitting needs at least 10^4 samples");
    auto [lo, hi] = bounding_box(dom.outer);
    std::vector<double> x(pr.dim);
    std::vector<double> depths;
    depths.reserve(std::size_t(nsamples / 2));
    for (long long start = 0, batch = 0; start < nsamples; start += mc_batch_size, ++batch) {
        splitmix64 rng(batch_seed(seed, static_cast<std::uint64_t>(batch)));
        long long count = std::min((long long)mc_batch_size, nsamples - start);
        for (long long i = 0; i < count; ++i) {
            for (int d = 0; d < pr.dim; ++d) x[d] = lo[d] + rng.uniform() * (hi[d] - lo[d]);
            if (in_shell(dom, x)) depths.push_back(detail::point_depth(dom, side, x));
        }
    }
    pr.samples = nsamples;
    pr.hits = (long long)depths.size();
    if (pr.hits < 100) throw error("insufficient-samples", "too few hits to fit a profile");
    std::sort(depths.begin(), depths.end());
    pr.tstar = std::max(detail::tstar_candidates(dom, side), depths.back());
    pr.depth_sorted = std::move(depths);

    pr.delta = linspace(0.0, pr.tstar, grid_size + 1);
    for (double d : pr.delta) pr.v.push_back(pr.omega_volume * pr.cdf(d));
    pr.v.front() = 0.0;
    pr.v.back() = pr.omega_volume;
    double anchor = pr.dirichlet_perimeter;
    pr.fit = pchip::fit(pr.delta, pr.v, &anchor);
    for (double sl : pr.fit.slope)
        if (sl < 0.0) throw error("fitting-failure", "volume profile fit is not monotone");
    return pr;
}

// ---------------------------------------------------------------------------
// time coordinate t(delta) = int_0^delta s(x)^{1-p'} dx, p' = p/(p-1)

struct depth_time_table {
    std::vector<double> x;  // fine depth grid
    std::vector<double> t;  // cumulative time
    double t_sharp = 0.0;   // t(tstar)

    double time_at(double d) const { return interp(d, x, t); }
    double depth_at(double time) const { return interp(time, t, x); }
};

// Depths where the fitted measure s has collapsed (below 1e-9 of its peak)
// contribute nothing, which keeps the negative power from blowing up in
// regions that carry no volume.  Closed-form profiles use the same dense
// grid and accumulation as the annulus table, so a concentric shell and its
// matching annulus get bit-identical time coordinates.
inline depth_time_table make_depth_time_table(const side_profile& pr, double p,
                                              int refine = 8) {
    const double pprime = p / (p - 1.0);
    depth_time_table tab;
    if (pr.exact) {
        tab.x = linspace(0.0, pr.tstar, 4001);
        tab.t = detail::accumulate_time(
            tab.x, [&](double d) { return pr.s(d); }, pprime, 0.0);
    } else {
        int fine_n = refine * (int(pr.delta.size()) - 1);
        tab.x = linspace(0.0, pr.tstar, fine_n + 1);
        tab.t = detail::accumulate_time(
            tab.x, [&](double d) { return pr.s(d); }, pprime, 1e-9);
    }
    tab.t_sharp = tab.t.back();
    return tab;
}

// Same coordinate for a concentric annulus, where the boundary measure is
// S(x) = n w_n (r+x)^{n-1} exactly; tabulated once on a dense grid.
struct annulus_time_table {
    annulus A;
    double p = 2.0;
    std::vector<double> x;  // depth from the inner sphere, [0, R-r]
    std::vector<double> T;
    double T_sharp = 0.0;

    double time_at(double d) const { return interp(d, x, T); }
    double depth_at(double time) const { return interp(time, T, x); }
    double weight_at_depth(double d) const {
        return sphere_area(A.dim) * std::pow(A.r + d, A.dim - 1);
    }
};

inline annulus_time_table make_annulus_time_table(const annulus& A, double p,
                                                  int nodes = 4001) {
    annulus_time_table tab;
    tab.A = A;
    tab.p = p;
    tab.x = linspace(0.0, A.R - A.r, nodes);
    tab.T = detail::accumulate_time(
        tab.x, [&](double d) { return tab.weight_at_depth(d); }, p / (p - 1.0), 0.0);
    tab.T_sharp = tab.T.back();
    return tab;
}

// ---------------------------------------------------------------------------
// profiles paired with their comparison annulus

inline constexpr int profile_alpha_cells = 256;

struct parallel_profile {
    boundary_side side = boundary_side::inner;
    int dim = 0;
    double p = 2.0;  // exponent entering the time coordinate (inner side)
    double omega_volume = 0.0;
    double dirichlet_perimeter = 0.0;
    annulus comparison;
    side_profile core;

    std::vector<double> deltas;  // depth grid with fitted tables
    std::vector<double> s_vals;
    std::vector<double> v_vals;

    double t_star = 0.0;      // outer: maximal depth; inner: time horizon t(delta*)
    double delta_star = 0.0;  // maximal depth
    double T_sharp = 0.0;     // annulus time horizon (inner side)

    // majorization tables on the alpha grid (h/H outer, g/G inner), with the
    // pointwise statistical tolerance of the lhs
    std::vector<double> alpha, lhs, rhs, tol;
    double alpha_mass = 0.0;  // inner: int_0^{t*} g^{p'} d(alpha)

    depth_time_table t_table;    // inner side only
    annulus_time_table T_table;  // inner side only
};

namespace detail {

inline void fill_common(parallel_profile& pp, const domain_spec& dom, const annulus& A) {
    pp.dim = dom.outer.dim;
    pp.omega_volume = pp.core.omega_volume;
    pp.dirichlet_perimeter = pp.core.dirichlet_perimeter;
    pp.comparison = A;
    pp.deltas = pp.core.delta;
    pp.v_vals = pp.core.v;
    pp.s_vals.clear();
    for (double d : pp.deltas) pp.s_vals.push_back(pp.core.s(d));
    if (std::fabs(annulus_volume(A) - pp.omega_volume) >
        1e-6 * std::max(1.0, pp.omega_volume))
        throw error("invalid-pairing", "annulus volume does not match the domain");
}

}  // namespace detail

// Outer-side profile paired with the equal-perimeter outer annulus.
inline parallel_profile profile_outer(const domain_spec& dom, const annulus& A,
                                      int grid_size = 64, long long samples = 200000,
                                      std::uint64_t seed = 1) {
    if (dom.dirichlet != boundary_side::outer || A.dirichlet != boundary_side::outer)
        throw error("invalid-pairing", "outer profile needs outer Dirichlet boundaries");
    if (dom.outer.dim != A.dim) throw error("invalid-pairing", "dimension mismatch");
    if (samples < (long long)mc_min_samples)
        throw error("insufficient-samples", "profile fitting needs at least 10^4 samples");
    parallel_profile pp;
    pp.side = boundary_side::outer;
    pp.core = fit_profile(dom, boundary_side::outer, grid_size, samples, seed);
    detail::fill_common(pp, dom, A);
    pp.t_star = pp.core.tstar;
    pp.delta_star = pp.core.tstar;

    const int n = pp.dim;
    const double wn = unit_ball_volume(n);
    // dense table for inverting the fitted volume profile
    auto xf = linspace(0.0, pp.core.tstar, 8 * grid_size + 1);
    std::vector<double> vf;
    vf.reserve(xf.size());
    for (double d : xf) vf.push_back(pp.core.volume_at(d));
    pp.alpha = linspace(0.0, pp.omega_volume, profile_alpha_cells + 1);
    for (std::size_t i = 0; i < pp.alpha.size(); ++i) {
        double a = pp.alpha[i];
        double d = i == 0 ? 0.0 : (i + 1 == pp.alpha.size() ? pp.core.tstar : interp(a, vf, xf));
        double Delta =
            i == 0 ? 0.0
                   : A.R - std::pow(std::max(std::pow(A.R, n) - a / wn, 0.0), 1.0 / n);
        pp.lhs.push_back(pp.core.s(d));
        pp.rhs.push_back(sphere_area(n) * std::pow(A.R - Delta, n - 1));
        pp.tol.push_back(pp.core.s_tolerance(d));
    }
    return pp;
}

// Inner-side profile paired with an inner-matched annulus; p sets the time
// coordinate (p > 1).
inline parallel_profile profile_inner(const domain_spec& dom, const annulus& A, double p,
                                      int grid_size = 64, long long samples = 200000,
                                      std::uint64_t seed = 1) {
    if (dom.dirichlet != boundary_side::inner || A.dirichlet != boundary_side::inner)
        throw error("invalid-pairing", "inner profile needs inner Dirichlet boundaries");
    if (dom.outer.dim != A.dim) throw error("invalid-pairing", "dimension mismatch");
    if (!(p > 1.0)) throw error("invalid-input", "the time coordinate needs p > 1");
    if (samples < (long long)mc_min_samples)
        throw error("insufficient-samples", "profile fitting needs at least 10^4 samples");
    parallel_profile pp;
    pp.side = boundary_side::inner;
    pp.p = p;
    pp.core = fit_profile(dom, boundary_side::inner, grid_size, samples, seed);
    detail::fill_common(pp, dom, A);
    pp.delta_star = pp.core.tstar;
    pp.t_table = make_depth_time_table(pp.core, p);
    pp.t_star = pp.t_table.t_sharp;
    pp.T_table = make_annulus_time_table(A, p);
    pp.T_sharp = pp.T_table.T_sharp;

    pp.alpha = linspace(0.0, pp.T_sharp, profile_alpha_cells + 1);
    for (std::size_t i = 0; i < pp.alpha.size(); ++i) {
        double a = pp.alpha[i];
        double d = i == 0 ? 0.0 : pp.t_table.depth_at(a);
        pp.lhs.push_back(pp.core.s(d));
        pp.rhs.push_back(pp.T_table.weight_at_depth(pp.T_table.depth_at(a)));
        pp.tol.push_back(pp.core.s_tolerance(d));
    }
    // Mass of the time parametrization, int_0^{t*} g^{p'} dt, accumulated on
    // the time table's own partition.  In time the integrand is concentrated
    // near t = 0 (the horizon is reached through collapsing corner level
    // sets, so the tail of [0, t*] is long and nearly empty); the table's
    // partition is uniform in depth, which resolves the mass region and still
    // couples g to the accumulated times cell by cell.
    const double pprime = p / (p - 1.0);
    double mass = 0.0;
    for (std::size_t i = 1; i < pp.t_table.x.size(); ++i) {
        double g0 = pp.core.s(pp.t_table.x[i - 1]);
        double g1 = pp.core.s(pp.t_table.x[i]);
        mass += 0.5 * (std::pow(g0, pprime) + std::pow(g1, pprime)) *
                (pp.t_table.t[i] - pp.t_table.t[i - 1]);
    }
    pp.alpha_mass = mass;
    return pp;
}

// Verdicts for the majorization lemmas.  The per-sample statistical
// tolerance is folded into the slack, so a sample passes iff slack >= 0.
// Horizon clauses are reported as samples with negative parameters:
//   -1: annulus width fits under the maximal depth / time horizon pairing
//   -2: annulus time horizon below the domain time horizon (inner side)
inline std::vector<inequality_report> check_profile_lemmas(const parallel_profile& pp) {
    std::vector<inequality_report> out;
    const annulus& A = pp.comparison;
    const double width = A.R - A.r;
    inequality_report rep;
    rep.tolerance = 0.0;
    if (pp.side == boundary_side::outer) {
        rep.name = "profile_majorization_outer";
        double htol = 1e-9 * std::max(1.0, width);
        double hslack = pp.delta_star + htol - width;
        rep.add_sample(-1.0, width, pp.delta_star, hslack);
        if (hslack < 0) rep.pass = false;
        for (std::size_t i = 0; i < pp.alpha.size(); ++i) {
            double slack = pp.rhs[i] + pp.tol[i] - pp.lhs[i];
            rep.add_sample(pp.alpha[i], pp.lhs[i], pp.rhs[i], slack);
            if (slack < 0) rep.pass = false;
        }
        out.push_back(std::move(rep));
        return out;
    }
    rep.name = "profile_majorization_inner";
    double htol = 1e-9 * std::max(1.0, width);
    double hslack = pp.delta_star + htol - width;
    rep.add_sample(-1.0, width, pp.delta_star, hslack);
    if (hslack < 0) rep.pass = false;
    double ttol = std::max(1e-9, 1e-3 * pp.T_sharp);
    double tslack = pp.t_star + ttol - pp.T_sharp;
    rep.add_sample(-2.0, pp.T_sharp, pp.t_star, tslack);
    if (tslack < 0) rep.pass = false;
    for (std::size_t i = 0; i < pp.alpha.size(); ++i) {
        double slack = pp.rhs[i] + pp.tol[i] - pp.lhs[i];
        rep.add_sample(pp.alpha[i], pp.lhs[i], pp.rhs[i], slack);
        if (slack < 0) rep.pass = false;
    }
    out.push_back(std::move(rep));

    inequality_report norm;
    norm.name = "normalization_integral";
    norm.tolerance = 1e-2;  // relative
    double nslack = 1e-2 * pp.omega_volume - std::fabs(pp.alpha_mass - pp.omega_volume);
    norm.add_sample(0.0, pp.alpha_mass, pp.omega_volume, nslack);
    norm.pass = nslack >= 0;
    out.push_back(std::move(norm));
    return out;
}

}  // namespace zaremba
