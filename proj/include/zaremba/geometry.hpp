#pragma once
// Convex-body primitives: balls, axis boxes and H-polytopes (dim 2 or 3) with
// exact volumes, perimeters, quermassintegrals, Steiner offsets, erosions,
// reference balls and point-to-body distances.
//
// Polytopes are kept in H-representation with unit outward normals; vertices
// are recovered once at construction by enumerating facet-tuple intersections
// (all pairs in 2-D, all triples in 3-D) and filtering by feasibility.  That
// is deliberately naive -- bodies here have tens of facets, not thousands --
// and avoids pulling in hull machinery.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "zaremba/common.hpp"
#include "zaremba/linalg.hpp"

namespace zaremba {

enum class body_kind { ball, box, polytope };

struct facet {
    std::vector<double> normal;  // unit outward
    double offset;               // {x : normal . x <= offset}
};

struct polytope_edge {
    int a, b;          // vertex indices
    int facet_i, facet_j;
};

struct convex_body {
    body_kind kind = body_kind::ball;
    int dim = 0;

    // ball
    std::vector<double> center;
    double radius = 0.0;

    // box
    std::vector<double> lo, hi;

    // polytope + derived incidence data filled at construction
    std::vector<facet> facets;
    std::vector<std::vector<double>> vertices;
    std::vector<std::vector<int>> facet_vertex;  // per facet, vertex indices
    std::vector<polytope_edge> edges;            // 3-D only
};

namespace detail {

constexpr double vertex_feasibility_tol = 1e-9;
constexpr double normal_unit_tol = 1e-12;

inline std::vector<double> sub(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline std::array<double, 3> cross3(const std::vector<double>& a, const std::vector<double>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Visit every k-subset of {0..m-1}.
template <typename F>
void for_each_subset(int m, int k, F&& body) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        body(idx);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// A polyhedron {x : n_i . x <= o_i} with nonempty interior is unbounded iff
// some direction d != 0 satisfies n_i . d <= 0 for all i.  Normalising d by
// its largest component reduces the test to 2*dim small feasibility problems
// with one coordinate pinned to +-1 and the others in [-1, 1].
inline bool has_recession_direction(const std::vector<facet>& fs, int dim) {
    const double tol = 1e-9;
    for (int pin = 0; pin < dim; ++pin) {
        for (int sign = -1; sign <= 1; sign += 2) {
            // constraints on the free coordinates z: a . z <= b
            std::vector<std::vector<double>> A;
            std::vector<double> b;
            for (const auto& f : fs) {
                std::vector<double> a;
                for (int d = 0; d < dim; ++d)
                    if (d != pin) a.push_back(f.normal[d]);
                A.push_back(a);
                b.push_back(-sign * f.normal[pin]);
            }
            const int free_dims = dim - 1;
            for (int d = 0; d < free_dims; ++d) {
                std::vector<double> a(free_dims, 0.0);
                a[d] = 1.0;
                A.push_back(a);
                b.push_back(1.0);
                a[d] = -1.0;
                A.push_back(a);
                b.push_back(1.0);
            }
            auto feasible_point = [&](const std::vector<double>& z) {
                for (std::size_t i = 0; i < A.size(); ++i)
                    if (dot(A[i], z) > b[i] + tol) return false;
                return true;
            };
            if (free_dims == 1) {
                double zlo = -1.0, zhi = 1.0;
                bool empty = false;
                for (std::size_t i = 0; i < A.size(); ++i) {
                    double c = A[i][0];
                    if (std::fabs(c) < 1e-14) {
                        if (b[i] < -tol) empty = true;
                    } else if (c > 0) {
                        zhi = std::min(zhi, b[i] / c);
                    } else {
                        zlo = std::max(zlo, b[i] / c);
                    }
                }
                if (!empty && zlo <= zhi + tol) return true;
            } else {
                // free_dims == 2: the box bounds make the region compact, so
                // nonempty implies some constraint pair meets at a feasible
                // point.
                const int m = int(A.size());
                bool found = false;
                for_each_subset(m, 2, [&](const std::vector<int>& idx) {
                    if (found) return;
                    std::vector<double> z;
                    if (!dense_solve({A[idx[0]], A[idx[1]]}, {b[idx[0]], b[idx[1]]}, z)) return;
                    if (feasible_point(z)) found = true;
                });
                if (found) return true;
            }
        }
    }
    return false;
}

// Chebyshev problem: maximise t subject to n_i . x + t <= o_i, by basis
// enumeration over (dim+1)-subsets.  Returns (center, t); t <= 0 means the
// interior is empty.
inline std::optional<std::pair<std::vector<double>, double>> chebyshev_lp(
    const std::vector<facet>& fs, int dim) {
    const int m = int(fs.size());
    if (m < dim + 1) return std::nullopt;
    std::optional<std::pair<std::vector<double>, double>> best;
    for_each_subset(m, dim + 1, [&](const std::vector<int>& idx) {
        std::vector<std::vector<double>> A;
        std::vector<double> b;
        for (int i : idx) {
            std::vector<double> row = fs[i].normal;
            row.push_back(1.0);
            A.push_back(row);
            b.push_back(fs[i].offset);
        }
        std::vector<double> xt;
        if (!dense_solve(A, b, xt)) return;
        double t = xt[dim];
        std::vector<double> x(xt.begin(), xt.begin() + dim);
        for (const auto& f : fs)
            if (dot(f.normal, x) + t > f.offset + vertex_feasibility_tol) return;
        if (!best || t > best->second) best = {{x, t}};
    });
    return best;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// constructors

inline convex_body make_ball(std::vector<double> center, double radius) {
    if (center.size() < 2) throw error("invalid-dimension", "ball needs dim >= 2");
    if (!(radius > 0.0)) throw error("invalid-body", "ball radius must be positive");
    convex_body K;
    K.kind = body_kind::ball;
    K.dim = int(center.size());
    K.center = std::move(center);
    K.radius = radius;
    return K;
}

inline convex_body make_box(std::vector<double> lo, std::vector<double> hi) {
    if (lo.size() != hi.size()) throw error("invalid-input", "box lo/hi dimension mismatch");
    if (lo.size() < 2) throw error("invalid-dimension", "box needs dim >= 2");
    for (std::size_t d = 0; d < lo.size(); ++d)
        if (!(lo[d] < hi[d])) throw error("invalid-body", "box needs lo < hi componentwise");
    convex_body K;
    K.kind = body_kind::box;
    K.dim = int(lo.size());
    K.lo = std::move(lo);
    K.hi = std::move(hi);
    return K;
}

// Enumerate vertices and facet incidences of an H-polytope in place.
// `drop_degenerate` controls whether facets that carry fewer than dim
// vertices are silently removed (needed for erosions, where facets lawfully
// disappear) or cause rejection (fresh user input).
inline void polytope_finalize(convex_body& K, bool drop_degenerate) {
    using namespace detail;
    const int dim = K.dim;
    while (true) {
        K.vertices.clear();
        K.facet_vertex.assign(K.facets.size(), {});
        K.edges.clear();
        const int m = int(K.facets.size());
        if (m < dim + 1) throw error("invalid-body", "polytope needs at least dim+1 facets");
        for_each_subset(m, dim, [&](const std::vector<int>& idx) {
            std::vector<std::vector<double>> A;
            std::vector<double> b;
            for (int i : idx) {
                A.push_back(K.facets[i].normal);
                b.push_back(K.facets[i].offset);
            }
            std::vector<double> x;
            if (!dense_solve(A, b, x)) return;
            for (const auto& f : K.facets)
                if (dot(f.normal, x) > f.offset + vertex_feasibility_tol) return;
            for (const auto& v : K.vertices) {
                double d2 = 0;
                for (int c = 0; c < dim; ++c) d2 += sqr(v[c] - x[c]);
                if (d2 < sqr(vertex_feasibility_tol)) return;  // duplicate
            }
            K.vertices.push_back(x);
        });
        if (K.vertices.empty()) throw error("invalid-body", "polytope has no vertices");
        for (int fi = 0; fi < m; ++fi) {
            for (int vi = 0; vi < int(K.vertices.size()); ++vi) {
                double s = dot(K.facets[fi].normal, K.vertices[vi]) - K.facets[fi].offset;
                if (std::fabs(s) <= vertex_feasibility_tol) K.facet_vertex[fi].push_back(vi);
            }
        }
        std::vector<int> degenerate;
        for (int fi = 0; fi < m; ++fi)
            if (int(K.facet_vertex[fi].size()) < dim) degenerate.push_back(fi);
        if (degenerate.empty()) break;
        if (!drop_degenerate)
            throw error("invalid-body", "degenerate polytope facet (fewer than dim vertices)");
        for (int k = int(degenerate.size()) - 1; k >= 0; --k)
            K.facets.erase(K.facets.begin() + degenerate[k]);
        // re-enumerate with the trimmed facet list
    }
    if (dim == 3) {
        const int m = int(K.facets.size());
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                std::vector<int> shared;
                for (int vi : K.facet_vertex[i])
                    for (int vj : K.facet_vertex[j])
                        if (vi == vj) shared.push_back(vi);
                if (shared.size() == 2) K.edges.push_back({shared[0], shared[1], i, j});
            }
        }
    }
}

inline convex_body make_polytope(std::vector<facet> facets, bool drop_degenerate = false) {
    if (facets.empty()) throw error("invalid-body", "polytope needs facets");
    const int dim = int(facets[0].normal.size());
    if (dim != 2 && dim != 3)
        throw error("unsupported-dimension", "H-polytopes are supported in dim 2 and 3 only");
    for (const auto& f : facets) {
        if (int(f.normal.size()) != dim)
            throw error("invalid-input", "facet normal dimension mismatch");
        if (std::fabs(norm2(f.normal) - 1.0) > detail::normal_unit_tol)
            throw error("invalid-body", "facet normals must have unit length (1e-12)");
    }
    if (detail::has_recession_direction(facets, dim))
        throw error("invalid-body", "polytope is unbounded");
    convex_body K;
    K.kind = body_kind::polytope;
    K.dim = dim;
    K.facets = std::move(facets);
    polytope_finalize(K, drop_degenerate);
    auto cheb = detail::chebyshev_lp(K.facets, dim);
    if (!cheb || cheb->second <= detail::vertex_feasibility_tol)
        throw error("invalid-body", "polytope has empty interior");
    return K;
}

// ---------------------------------------------------------------------------
// elementary measures

inline double facet_area(const convex_body& K, int fi) {
    const auto& ids = K.facet_vertex[fi];
    if (K.dim == 2) {
        const auto& a = K.vertices[ids[0]];
        const auto& b = K.vertices[ids[1]];
        return std::sqrt(sqr(a[0] - b[0]) + sqr(a[1] - b[1]));
    }
    // 3-D: order the facet cycle by angle around its centroid, fan-triangulate
    std::vector<double> c(3, 0.0);
    for (int vi : ids)
        for (int d = 0; d < 3; ++d) c[d] += K.vertices[vi][d] / ids.size();
    const auto& n = K.facets[fi].normal;
    std::vector<double> e1 = detail::sub(K.vertices[ids[0]], c);
    double l1 = norm2(e1);
    if (l1 < 1e-14) return 0.0;
    for (auto& v : e1) v /= l1;
    auto e2a = detail::cross3(n, e1);
    std::vector<double> e2 = {e2a[0], e2a[1], e2a[2]};
    std::vector<std::pair<double, int>> order;
    for (int vi : ids) {
        auto r = detail::sub(K.vertices[vi], c);
        order.push_back({std::atan2(dot(r, e2), dot(r, e1)), vi});
    }
    std::sort(order.begin(), order.end());
    double area = 0.0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        auto r1 = detail::sub(K.vertices[order[k].second], c);
        auto r2 = detail::sub(K.vertices[order[(k + 1) % order.size()].second], c);
        auto cr = detail::cross3(r1, r2);
        area += 0.5 * std::sqrt(sqr(cr[0]) + sqr(cr[1]) + sqr(cr[2]));
    }
    return area;
}

inline double volume(const convex_body& K) {
    switch (K.kind) {
        case body_kind::ball:
            return unit_ball_volume(K.dim) * std::pow(K.radius, K.dim);
        case body_kind::box: {
            double v = 1.0;
            for (int d = 0; d < K.dim; ++d) v *= K.hi[d] - K.lo[d];
            return v;
        }
        case body_kind::polytope: {
            // divergence theorem: V = (1/n) sum_i offset_i * area_i
            double v = 0.0;
            for (int fi = 0; fi < int(K.facets.size()); ++fi)
                v += K.facets[fi].offset * facet_area(K, fi);
            return v / K.dim;
        }
    }
    return 0.0;
}

inline double perimeter(const convex_body& K) {
    switch (K.kind) {
        case body_kind::ball:
            return sphere_area(K.dim) * std::pow(K.radius, K.dim - 1);
        case body_kind::box: {
            double p = 0.0;
            for (int d = 0; d < K.dim; ++d) {
                double f = 1.0;
                for (int e = 0; e < K.dim; ++e)
                    if (e != d) f *= K.hi[e] - K.lo[e];
                p += 2.0 * f;
            }
            return p;
        }
        case body_kind::polytope: {
            double p = 0.0;
            for (int fi = 0; fi < int(K.facets.size()); ++fi) p += facet_area(K, fi);
            return p;
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// quermassintegrals

struct quermassintegrals {
    int dim = 0;
    std::vector<double> w;  // w[j] = W_j, j = 0..dim
};

// W_0 = volume, W_1 = perimeter/n, W_n = volume of the unit ball.  Balls get
// the closed form W_j = w_n R^{n-j} in every dimension; boxes and polytopes
// are supported in dim 2 and 3, where the only nontrivial entry is
// W_2 = M/3 with M = sum_edges length * exterior_dihedral / 2.
inline quermassintegrals compute_quermassintegrals(const convex_body& K) {
    quermassintegrals Q;
    Q.dim = K.dim;
    Q.w.assign(K.dim + 1, 0.0);
    if (K.kind == body_kind::ball) {
        for (int j = 0; j <= K.dim; ++j)
            Q.w[j] = unit_ball_volume(K.dim) * std::pow(K.radius, K.dim - j);
        return Q;
    }
    if (K.dim != 2 && K.dim != 3)
        throw error("unsupported-dimension", "quermassintegrals for non-balls need dim 2 or 3");
    Q.w[0] = volume(K);
    Q.w[1] = perimeter(K) / K.dim;
    Q.w[K.dim] = unit_ball_volume(K.dim);
    if (K.dim == 3) {
        double M = 0.0;
        if (K.kind == body_kind::box) {
            double a = K.hi[0] - K.lo[0], b = K.hi[1] - K.lo[1], c = K.hi[2] - K.lo[2];
            M = pi * (a + b + c);  // 4 parallel edges per axis, right angles
        } else {
            for (const auto& e : K.edges) {
                double len = norm2(detail::sub(K.vertices[e.a], K.vertices[e.b]));
                double cosang = dot(K.facets[e.facet_i].normal, K.facets[e.facet_j].normal);
                cosang = std::clamp(cosang, -1.0, 1.0);
                M += len * std::acos(cosang) / 2.0;
            }
        }
        Q.w[2] = M / 3.0;
    }
    return Q;
}

// ---------------------------------------------------------------------------
// inradius / Chebyshev data

struct inball {
    std::vector<double> center;
    double radius = 0.0;
};

inline inball chebyshev_ball(const convex_body& K) {
    switch (K.kind) {
        case body_kind::ball:
            return {K.center, K.radius};
        case body_kind::box: {
            inball ib;
            ib.radius = (K.hi[0] - K.lo[0]) / 2;
            for (int d = 0; d < K.dim; ++d) {
                ib.center.push_back((K.lo[d] + K.hi[d]) / 2);
                ib.radius = std::min(ib.radius, (K.hi[d] - K.lo[d]) / 2);
            }
            return ib;
        }
        case body_kind::polytope: {
            auto best = detail::chebyshev_lp(K.facets, K.dim);
            if (!best) throw error("invalid-body", "Chebyshev problem infeasible");
            return {best->first, best->second};
        }
    }
    return {};
}

inline double inradius(const convex_body& K) { return chebyshev_ball(K).radius; }

// ---------------------------------------------------------------------------
// parallel bodies

// delta-erosion.  For a convex body this is exactly the halfspace inset, so
// each variant just pulls its facets in by delta; facets may lawfully become
// redundant and are dropped.
inline convex_body inner_parallel_body(const convex_body& K, double delta) {
    if (!(delta > 0.0)) throw error("invalid-delta", "erosion depth must be positive");
    if (delta >= inradius(K) - 1e-15)
        throw error("empty-erosion", "erosion depth reaches the inradius");
    switch (K.kind) {
        case body_kind::ball:
            return make_ball(K.center, K.radius - delta);
        case body_kind::box: {
            std::vector<double> lo = K.lo, hi = K.hi;
            for (int d = 0; d < K.dim; ++d) {
                lo[d] += delta;
                hi[d] -= delta;
            }
            return make_box(lo, hi);
        }
        case body_kind::polytope: {
            std::vector<facet> fs = K.facets;
            for (auto& f : fs) f.offset -= delta;
            return make_polytope(std::move(fs), /*drop_degenerate=*/true);
        }
    }
    throw error("invalid-body", "unreachable");
}

// Steiner formulas for the outer offset K_delta, evaluated from the
// quermassintegrals:
//   P(K_delta) = n * sum_{i=0}^{n-1} C(n-1,i) W_{i+1} delta^i
//   V(K_delta) =     sum_{i=0}^{n}   C(n,i)   W_i     delta^i
struct steiner_offset {
    double perimeter = 0.0;
    double volume = 0.0;
};

inline double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline steiner_offset steiner_outer_offset(const convex_body& K, double delta) {
    if (delta < 0.0) throw error("invalid-delta", "outer offset needs delta >= 0");
    auto Q = compute_quermassintegrals(K);
    const int n = K.dim;
    steiner_offset out;
    double dpow = 1.0;
    for (int i = 0; i <= n; ++i) {
        if (i < n) out.perimeter += n * binomial(n - 1, i) * Q.w[i + 1] * dpow;
        out.volume += binomial(n, i) * Q.w[i] * dpow;
        dpow *= delta;
    }
    return out;
}

// ---------------------------------------------------------------------------
// reference balls

enum class ball_rule { perimeter, quermass };

// perimeter: the ball with P(B) = P(K)  ->  R = (P/(n w_n))^{1/(n-1)}
// quermass:  the ball with W_{n-1}(B) = W_{n-1}(K)  ->  R = W_{n-1}/w_n
inline convex_body reference_ball(const convex_body& K, ball_rule rule) {
    double R;
    if (rule == ball_rule::perimeter) {
        R = std::pow(perimeter(K) / sphere_area(K.dim), 1.0 / (K.dim - 1));
    } else {
        auto Q = compute_quermassintegrals(K);
        R = Q.w[K.dim - 1] / unit_ball_volume(K.dim);
    }
    return make_ball(std::vector<double>(K.dim, 0.0), R);
}

// ---------------------------------------------------------------------------
// distances and membership

inline bool contains(const convex_body& K, const std::vector<double>& x, double tol = 0.0) {
    switch (K.kind) {
        case body_kind::ball: {
            double d2 = 0;
            for (int d = 0; d < K.dim; ++d) d2 += sqr(x[d] - K.center[d]);
            return std::sqrt(d2) <= K.radius + tol;
        }
        case body_kind::box:
            for (int d = 0; d < K.dim; ++d)
                if (x[d] < K.lo[d] - tol || x[d] > K.hi[d] + tol) return false;
            return true;
        case body_kind::polytope:
            for (const auto& f : K.facets)
                if (dot(f.normal, x) > f.offset + tol) return false;
            return true;
    }
    return false;
}

// Distance from x to the closure of K (0 inside).  Polytopes use closest-
// feature enumeration -- facet projections filtered by feasibility, then
// edges, then vertices -- which is exact for convex bodies in dim 2 and 3.
inline double distance_to_body(const convex_body& K, const std::vector<double>& x) {
    if (int(x.size()) != K.dim) throw error("invalid-input", "point dimension mismatch");
    switch (K.kind) {
        case body_kind::ball: {
            double d2 = 0;
            for (int d = 0; d < K.dim; ++d) d2 += sqr(x[d] - K.center[d]);
            return std::max(0.0, std::sqrt(d2) - K.radius);
        }
        case body_kind::box: {
            double d2 = 0;
            for (int d = 0; d < K.dim; ++d) {
                double g = std::max({K.lo[d] - x[d], x[d] - K.hi[d], 0.0});
                d2 += g * g;
            }
            return std::sqrt(d2);
        }
        case body_kind::polytope: {
            if (contains(K, x, 1e-12)) return 0.0;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t fi = 0; fi < K.facets.size(); ++fi) {
                double s = dot(K.facets[fi].normal, x) - K.facets[fi].offset;
                if (s <= 0) continue;
                std::vector<double> y(K.dim);
                for (int d = 0; d < K.dim; ++d) y[d] = x[d] - s * K.facets[fi].normal[d];
                if (contains(K, y, detail::vertex_feasibility_tol)) best = std::min(best, s);
            }
            auto segment_distance = [&](const std::vector<double>& a, const std::vector<double>& b) {
                auto ab = detail::sub(b, a);
                double t = dot(detail::sub(x, a), ab) / dot(ab, ab);
                t = std::clamp(t, 0.0, 1.0);
                double d2 = 0;
                for (int d = 0; d < K.dim; ++d) d2 += sqr(x[d] - (a[d] + t * ab[d]));
                return std::sqrt(d2);
            };
            if (K.dim == 3) {
                for (const auto& e : K.edges)
                    best = std::min(best, segment_distance(K.vertices[e.a], K.vertices[e.b]));
            } else {
                for (const auto& ids : K.facet_vertex)
                    best = std::min(best, segment_distance(K.vertices[ids[0]], K.vertices[ids[1]]));
            }
            for (const auto& v : K.vertices) {
                double d2 = 0;
                for (int d = 0; d < K.dim; ++d) d2 += sqr(x[d] - v[d]);
                best = std::min(best, std::sqrt(d2));
            }
            return best;
        }
    }
    return 0.0;
}

// Distance from an interior point to the boundary of K (negative outside);
// the "depth" coordinate of the outer-side parallel profiles.
inline double boundary_clearance(const convex_body& K, const std::vector<double>& x) {
    switch (K.kind) {
        case body_kind::ball: {
            double d2 = 0;
            for (int d = 0; d < K.dim; ++d) d2 += sqr(x[d] - K.center[d]);
            return K.radius - std::sqrt(d2);
        }
        case body_kind::box: {
            double m = std::numeric_limits<double>::infinity();
            for (int d = 0; d < K.dim; ++d) m = std::min({m, x[d] - K.lo[d], K.hi[d] - x[d]});
            return m;
        }
        case body_kind::polytope: {
            double m = std::numeric_limits<double>::infinity();
            for (const auto& f : K.facets) m = std::min(m, f.offset - dot(f.normal, x));
            return m;
        }
    }
    return 0.0;
}

// Extreme points used by bounding-box and farthest-point searches.  Balls
// have none (callers special-case them).
inline std::vector<std::vector<double>> extreme_points(const convex_body& K) {
    if (K.kind == body_kind::polytope) return K.vertices;
    if (K.kind == body_kind::box) {
        std::vector<std::vector<double>> out;
        for (int mask = 0; mask < (1 << K.dim); ++mask) {
            std::vector<double> v(K.dim);
            for (int d = 0; d < K.dim; ++d) v[d] = (mask >> d) & 1 ? K.hi[d] : K.lo[d];
            out.push_back(v);
        }
        return out;
    }
    return {};
}

inline double diameter(const convex_body& K) {
    if (K.kind == body_kind::ball) return 2.0 * K.radius;
    auto pts = extreme_points(K);
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::max(best, norm2(detail::sub(pts[i], pts[j])));
    return best;
}

// Axis-aligned bounding box (sampling domain for Monte-Carlo estimators).
inline std::pair<std::vector<double>, std::vector<double>> bounding_box(const convex_body& K) {
    if (K.kind == body_kind::box) return {K.lo, K.hi};
    if (K.kind == body_kind::ball) {
        std::vector<double> lo(K.dim), hi(K.dim);
        for (int d = 0; d < K.dim; ++d) {
            lo[d] = K.center[d] - K.radius;
            hi[d] = K.center[d] + K.radius;
        }
        return {lo, hi};
    }
    std::vector<double> lo(K.dim, std::numeric_limits<double>::infinity());
    std::vector<double> hi(K.dim, -std::numeric_limits<double>::infinity());
    for (const auto& v : K.vertices)
        for (int d = 0; d < K.dim; ++d) {
            lo[d] = std::min(lo[d], v[d]);
            hi[d] = std::max(hi[d], v[d]);
        }
    return {lo, hi};
}

}  // namespace zaremba
