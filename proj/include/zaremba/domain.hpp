#pragma once
// Shell domains Omega = Outer \ closure(Inner) with a Dirichlet condition on
// one boundary component and Neumann on the other (the inner body may be
// absent, leaving a simply connected domain), plus the comparison annuli
// obtained by matching the Dirichlet perimeter (or mean width) and the
// volume.

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "zaremba/common.hpp"
#include "zaremba/geometry.hpp"

namespace zaremba {

enum class boundary_side { inner, outer };

inline std::string to_string(boundary_side s) {
    return s == boundary_side::inner ? "inner" : "outer";
}

struct domain_spec {
    convex_body outer;
    std::optional<convex_body> inner;
    boundary_side dirichlet = boundary_side::inner;
};

// The closure of Inner must sit strictly inside Outer; since the clearance
// function is concave, checking extreme points (plus center/radius for
// balls) is exact for the supported bodies.
inline domain_spec make_domain(convex_body outer, std::optional<convex_body> inner,
                               boundary_side dirichlet) {
    if (inner) {
        if (outer.dim != inner->dim) throw error("invalid-input", "body dimension mismatch");
        const double margin = 1e-9;
        if (inner->kind == body_kind::ball) {
            if (boundary_clearance(outer, inner->center) < inner->radius + margin)
                throw error("invalid-body", "inner body must sit strictly inside the outer body");
        } else {
            for (const auto& v : extreme_points(*inner))
                if (boundary_clearance(outer, v) < margin)
                    throw error("invalid-body",
                                "inner body must sit strictly inside the outer body");
        }
    } else if (dirichlet == boundary_side::inner) {
        throw error("invalid-input", "inner Dirichlet condition requires an inner body");
    }
    return {std::move(outer), std::move(inner), dirichlet};
}

inline double domain_volume(const domain_spec& dom) {
    return volume(dom.outer) - (dom.inner ? volume(*dom.inner) : 0.0);
}

inline const convex_body& dirichlet_body(const domain_spec& dom) {
    return dom.dirichlet == boundary_side::inner ? *dom.inner : dom.outer;
}

inline double dirichlet_perimeter(const domain_spec& dom) {
    return perimeter(dirichlet_body(dom));
}

// ---------------------------------------------------------------------------
// concentric annuli

struct annulus {
    int dim = 0;
    double r = 0.0, R = 0.0;  // inner and outer radii, 0 < r < R
    boundary_side dirichlet = boundary_side::inner;
};

inline annulus make_annulus(int dim, double r, double R, boundary_side dirichlet) {
    if (dim < 2) throw error("invalid-dimension", "annulus needs dim >= 2");
    if (!(0.0 < r && r < R)) throw error("invalid-input", "annulus needs 0 < r < R");
    return {dim, r, R, dirichlet};
}

inline double annulus_volume(const annulus& A) {
    return unit_ball_volume(A.dim) * (std::pow(A.R, A.dim) - std::pow(A.r, A.dim));
}

inline domain_spec annulus_domain(const annulus& A) {
    std::vector<double> origin(A.dim, 0.0);
    return make_domain(make_ball(origin, A.R), make_ball(origin, A.r), A.dirichlet);
}

// Is the domain itself a concentric ball shell (so closed forms apply)?
inline std::optional<annulus> as_concentric_annulus(const domain_spec& dom) {
    if (!dom.inner || dom.outer.kind != body_kind::ball || dom.inner->kind != body_kind::ball)
        return std::nullopt;
    for (int d = 0; d < dom.outer.dim; ++d)
        if (std::fabs(dom.outer.center[d] - dom.inner->center[d]) > 1e-12) return std::nullopt;
    return annulus{dom.outer.dim, dom.inner->radius, dom.outer.radius, dom.dirichlet};
}

enum class annulus_rule {
    AO,       // match perimeter of the outer (Dirichlet) boundary and |Omega|
    AI,       // match perimeter of the inner (Dirichlet) boundary and |Omega|
    AItilde,  // match W_{n-1} of the inner (Dirichlet) boundary and |Omega|
};

inline std::string to_string(annulus_rule r) {
    switch (r) {
        case annulus_rule::AO: return "AO";
        case annulus_rule::AI: return "AI";
        case annulus_rule::AItilde: return "AItilde";
    }
    return "";
}

// Build the comparison annulus for a shell domain.  The matched boundary
// carries the Dirichlet condition; the other radius absorbs the volume.
inline annulus build_comparison_annulus(const domain_spec& dom, annulus_rule rule) {
    const int n = dom.outer.dim;
    const double wn = unit_ball_volume(n);
    const double vol = domain_volume(dom);
    if (rule == annulus_rule::AO) {
        if (dom.dirichlet != boundary_side::outer)
            throw error("invalid-pairing",
                        "outer-matched annulus needs the Dirichlet condition on the outer boundary");
        double R = std::pow(perimeter(dom.outer) / sphere_area(n), 1.0 / (n - 1));
        double rn = std::pow(R, n) - vol / wn;
        if (!(rn > 0.0))
            throw error("infeasible-volume",
                        "domain volume does not fit inside the matched outer ball");
        return make_annulus(n, std::pow(rn, 1.0 / n), R, boundary_side::outer);
    }
    if (dom.dirichlet != boundary_side::inner || !dom.inner)
        throw error("invalid-pairing",
                    "inner-matched annulus needs the Dirichlet condition on the inner boundary");
    double r;
    if (rule == annulus_rule::AI) {
        r = std::pow(perimeter(*dom.inner) / sphere_area(n), 1.0 / (n - 1));
    } else {
        auto Q = compute_quermassintegrals(*dom.inner);
        r = Q.w[n - 1] / wn;
    }
    double R = std::pow(std::pow(r, n) + vol / wn, 1.0 / n);
    return make_annulus(n, r, R, boundary_side::inner);
}

}  // namespace zaremba
