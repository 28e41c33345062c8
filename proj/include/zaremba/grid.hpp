#pragma once
// Finite-volume Laplace solvers on axis-aligned box shells (p = q = 2).
//
// Nodes live on a uniform lattice of pitch h spanning the outer box; the
// optional inner box must be lattice-aligned (checked to 1e-9 in units of
// h).  Nodes strictly inside the hole are removed, nodes on the Dirichlet
// boundary are eliminated, and the remaining boundary is natural (Neumann).
// Cell-boundary quadrature halves the mass of a node and the transverse
// weight of an edge in every direction where a neighbour is missing; the
// halving uses the symmetric rule "either endpoint at the rim", which keeps
// the stiffness matrix symmetric positive definite.
//
// The first eigenvalue comes from inverse power iteration with conjugate-
// gradient solves; torsion solves K u = M 1 once and reports the energy
// identity u'Ku = int u as a consistency certificate.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zaremba/common.hpp"
#include "zaremba/domain.hpp"
#include "zaremba/linalg.hpp"

namespace zaremba {

struct grid_problem {
    int dim = 0;
    double h = 0.0;
    std::vector<double> lo;          // outer box corner, node x = lo + i h
    std::vector<int> shape;          // nodes per dimension
    std::vector<std::uint8_t> in_dom, dirich, missmask;
    std::vector<long long> unknown;  // node -> unknown id, -1 when eliminated
    std::vector<std::size_t> nodes;  // unknown id -> node
    std::vector<double> mass;        // lumped mass per unknown
    csr_matrix K;                    // stiffness on the unknowns
};

namespace grid_detail {

inline long long aligned_steps(double from, double to, double h, const char* what) {
    double steps = (to - from) / h;
    double r = std::round(steps);
    if (std::fabs(steps - r) > 1e-9)
        throw error("alignment-error", std::string(what) + " is not aligned to the grid pitch");
    return (long long)r;
}

}  // namespace grid_detail

inline grid_problem build_grid_problem(const domain_spec& spec, double h) {
    if (spec.outer.kind != body_kind::box)
        throw error("invalid-input", "grid solver needs an axis-aligned outer box");
    if (spec.inner && spec.inner->kind != body_kind::box)
        throw error("invalid-input", "grid solver needs an axis-aligned inner box");
    if (!(h > 0.0)) throw error("invalid-input", "grid pitch must be positive");
    const int dim = spec.outer.dim;
    const bool holed = spec.inner.has_value();

    grid_problem G;
    G.dim = dim;
    G.h = h;
    G.lo = spec.outer.lo;
    G.shape.resize(dim);
    std::vector<long long> ilo(dim, 0), ihi(dim, -1);
    for (int d = 0; d < dim; ++d) {
        long long n =
            grid_detail::aligned_steps(spec.outer.lo[d], spec.outer.hi[d], h, "outer box span");
        if (n < 2) throw error("invalid-input", "grid pitch too coarse for the outer box");
        G.shape[d] = int(n) + 1;
    }
    if (holed) {
        for (int d = 0; d < dim; ++d) {
            ilo[d] = grid_detail::aligned_steps(spec.outer.lo[d], spec.inner->lo[d], h,
                                                "inner box offset");
            ihi[d] = grid_detail::aligned_steps(spec.outer.lo[d], spec.inner->hi[d], h,
                                                "inner box offset");
        }
    }

    std::size_t total = 1;
    std::vector<std::size_t> stride(dim);
    for (int d = dim - 1; d >= 0; --d) {
        stride[d] = total;
        total *= std::size_t(G.shape[d]);
    }
    G.in_dom.assign(total, 0);
    G.dirich.assign(total, 0);
    G.missmask.assign(total, 0);
    G.unknown.assign(total, -1);

    std::vector<long long> idx(dim, 0);
    for (std::size_t node = 0; node < total; ++node) {
        bool strict_in = holed, in_closed_hole = holed, on_outer = false;
        for (int d = 0; d < dim; ++d) {
            if (!(idx[d] > ilo[d] && idx[d] < ihi[d])) strict_in = false;
            if (holed && !(idx[d] >= ilo[d] && idx[d] <= ihi[d])) in_closed_hole = false;
            if (idx[d] == 0 || idx[d] == G.shape[d] - 1) on_outer = true;
        }
        if (!strict_in) {
            G.in_dom[node] = 1;
            bool on_hole = in_closed_hole;  // hole boundary: closed box minus interior
            G.dirich[node] =
                spec.dirichlet == boundary_side::outer ? on_outer : (on_hole ? 1 : 0);
        }
        for (int d = dim - 1; d >= 0; --d) {
            if (++idx[d] < G.shape[d]) break;
            idx[d] = 0;
        }
    }

    // missing-neighbour mask drives both mass lumping and transverse halving
    idx.assign(dim, 0);
    for (std::size_t node = 0; node < total; ++node) {
        if (G.in_dom[node]) {
            std::uint8_t m = 0;
            for (int d = 0; d < dim; ++d) {
                bool lo_gone = idx[d] == 0 || !G.in_dom[node - stride[d]];
                bool hi_gone = idx[d] == G.shape[d] - 1 || !G.in_dom[node + stride[d]];
                if (lo_gone || hi_gone) m |= std::uint8_t(1) << d;
            }
            G.missmask[node] = m;
        }
        for (int d = dim - 1; d >= 0; --d) {
            if (++idx[d] < G.shape[d]) break;
            idx[d] = 0;
        }
    }

    for (std::size_t node = 0; node < total; ++node)
        if (G.in_dom[node] && !G.dirich[node]) {
            G.unknown[node] = (long long)G.nodes.size();
            G.nodes.push_back(node);
        }
    if (G.nodes.empty()) throw error("solver-failure", "no degrees of freedom on the grid");

    const double cell = std::pow(h, dim);
    const double cond = std::pow(h, dim - 2);
    G.mass.resize(G.nodes.size());
    for (std::size_t u = 0; u < G.nodes.size(); ++u) {
        double w = cell;
        for (int d = 0; d < dim; ++d)
            if (G.missmask[G.nodes[u]] & (std::uint8_t(1) << d)) w *= 0.5;
        G.mass[u] = w;
    }

    // stiffness rows, neighbours gathered then sorted by column
    G.K.n = G.nodes.size();
    G.K.row_ptr.assign(G.K.n + 1, 0);
    std::vector<std::pair<std::size_t, double>> row;
    std::vector<long long> nid(dim);
    for (std::size_t u = 0; u < G.nodes.size(); ++u) {
        std::size_t node = G.nodes[u];
        std::size_t rest = node;
        for (int d = 0; d < dim; ++d) {
            nid[d] = (long long)(rest / stride[d]);
            rest %= stride[d];
        }
        row.clear();
        double diag = 0.0;
        for (int d = 0; d < dim; ++d) {
            for (int s = -1; s <= 1; s += 2) {
                long long j = nid[d] + s;
                if (j < 0 || j >= G.shape[d]) continue;
                std::size_t nb = s < 0 ? node - stride[d] : node + stride[d];
                if (!G.in_dom[nb]) continue;
                double c = cond;
                for (int dd = 0; dd < dim; ++dd) {
                    if (dd == d) continue;
                    std::uint8_t bit = std::uint8_t(1) << dd;
                    if ((G.missmask[node] & bit) || (G.missmask[nb] & bit)) c *= 0.5;
                }
                diag += c;
                if (G.unknown[nb] >= 0) row.push_back({std::size_t(G.unknown[nb]), -c});
            }
        }
        row.push_back({u, diag});
        std::sort(row.begin(), row.end());
        for (auto& [c, v] : row) {
            G.K.col.push_back(c);
            G.K.val.push_back(v);
        }
        G.K.row_ptr[u + 1] = G.K.col.size();
    }
    return G;
}

struct grid_eigen_result {
    double tau = 0.0;
    int iterations = 0;           // inverse power steps
    long long cg_iterations = 0;  // total inner iterations
    double residual = 0.0;        // last relative eigenvalue change
    bool converged = false;
    std::size_t unknowns = 0;
    double h = 0.0;
};

inline grid_eigen_result solve_grid_eigen(const domain_spec& spec, double h) {
    grid_problem G = build_grid_problem(spec, h);
    const std::size_t n = G.nodes.size();
    grid_eigen_result out;
    out.h = h;
    out.unknowns = n;
    std::vector<double> x(n, 1.0), b(n), y(n, 0.0), Ky(n);
    double lambda = 0.0, prev = 0.0;
    for (int it = 0; it < 500; ++it) {
        for (std::size_t i = 0; i < n; ++i) b[i] = G.mass[i] * x[i];
        auto cg = conjugate_gradient(G.K, b, y, 1e-10, 200000);
        out.cg_iterations += cg.iterations;
        if (!cg.converged) throw error("solver-failure", "conjugate gradients stalled");
        double nrm = 0.0;
        for (double t : y) nrm = std::max(nrm, std::fabs(t));
        for (auto& t : y) t /= nrm;
        G.K.multiply(y, Ky);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            num += y[i] * Ky[i];
            den += G.mass[i] * y[i] * y[i];
        }
        lambda = num / den;
        x = y;
        out.iterations = it + 1;
        if (it > 0) {
            out.residual = std::fabs(lambda - prev) / std::fabs(lambda);
            if (out.residual <= 1e-8) {
                out.converged = true;
                break;
            }
        }
        prev = lambda;
    }
    if (!out.converged) throw error("solver-failure", "inverse power iteration did not settle");
    out.tau = lambda;
    return out;
}

struct grid_torsion_result {
    double T = 0.0;               // torsional rigidity = int u for p = 2
    double integral = 0.0;        // int_Omega u dx
    double identity_error = 0.0;  // |u'Ku - int u| / max(1, int u)
    long long cg_iterations = 0;
    std::size_t unknowns = 0;
    double h = 0.0;
};

inline grid_torsion_result solve_grid_torsion(const domain_spec& spec, double h) {
    grid_problem G = build_grid_problem(spec, h);
    const std::size_t n = G.nodes.size();
    grid_torsion_result out;
    out.h = h;
    out.unknowns = n;
    std::vector<double> u(n, 0.0), Ku(n);
    auto cg = conjugate_gradient(G.K, G.mass, u, 1e-12, 400000);
    out.cg_iterations = cg.iterations;
    if (!cg.converged) throw error("solver-failure", "conjugate gradients stalled");
    double I = 0.0;
    for (std::size_t i = 0; i < n; ++i) I += G.mass[i] * u[i];
    G.K.multiply(u, Ku);
    double energy = 0.0;
    for (std::size_t i = 0; i < n; ++i) energy += u[i] * Ku[i];
    out.integral = I;
    out.T = I;
    out.identity_error = std::fabs(energy - I) / std::max(1.0, std::fabs(I));
    return out;
}

}  // namespace zaremba
