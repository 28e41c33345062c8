#pragma once
// Web-function Rayleigh quotients: certified eigenvalue upper bounds built
// from a parallel-set profile and the eigenprofile of its comparison annulus.
//
// The trial function is constant on depth level sets.  On the outer side the
// annulus profile is composed with the volume coupling V_A^{-1}(v(delta)); on
// the inner side with the time coupling T^{-1}(t(delta)), held at its Neumann
// plateau beyond the annulus time horizon.  Both quotients are evaluated with
// the midpoint/trapezoid quadrature of the radial solver, so for a concentric
// shell the sums collapse to the radial Rayleigh quotient itself.  Any
// Rayleigh quotient of a trial function dominates tau(Omega); the profile
// majorization lemmas guarantee in turn that these particular quotients stay
// below tau(annulus), which is what makes the sandwich informative.

#include <cmath>
#include <vector>

#include "zaremba/common.hpp"
#include "zaremba/domain.hpp"
#include "zaremba/profile.hpp"
#include "zaremba/radial.hpp"

namespace zaremba {

struct web_bound_result {
    boundary_side side = boundary_side::inner;
    double value = 0.0;  // num / den^{p/q} >= tau(Omega)
    double num = 0.0, den = 0.0;
    double plateau_volume = 0.0;  // inner side: volume carried at the plateau value
    int cells = 0;
};

inline web_bound_result web_function_bound(const parallel_profile& pp,
                                           const radial_solution& ann, double p, double q) {
    if (pp.side != ann.dirichlet)
        throw error("invalid-pairing", "profile side and annulus Dirichlet side differ");
    if (pp.dim != ann.n) throw error("invalid-pairing", "dimension mismatch");
    const annulus& A = pp.comparison;
    double scale = std::max(1.0, A.R);
    if (std::fabs(ann.r - A.r) > 1e-9 * scale || std::fabs(ann.R - A.R) > 1e-9 * scale)
        throw error("invalid-pairing", "eigenprofile solved on a different annulus");
    if (std::fabs(ann.p - p) > 1e-12 || std::fabs(ann.q - q) > 1e-12)
        throw error("invalid-pairing", "eigenprofile solved for different exponents");
    if (!(p > 1.0) || !(q >= 1.0)) throw error("invalid-input", "need p > 1 and q >= 1");

    const int n = pp.dim;
    const double wn = unit_ball_volume(n);
    auto f_at = [&](double rho) { return interp(rho, ann.rho, ann.f); };
    const int N = ann.N;
    web_bound_result out;
    out.side = pp.side;
    out.cells = N;

    if (pp.side == boundary_side::outer) {
        const double len = pp.delta_star;
        const double dd = len / N;
        std::vector<double> u(N + 1);
        for (int k = 0; k <= N; ++k) {
            double delta = k == N ? len : k * dd;
            double vol = std::min(pp.core.volume_at(delta), annulus_volume(A));
            double Delta =
                A.R - std::pow(std::max(std::pow(A.R, n) - vol / wn, 0.0), 1.0 / n);
            u[k] = f_at(A.R - Delta);
        }
        double num = 0.0, den = 0.0;
        for (int k = 0; k < N; ++k) {
            double mid = (k + 0.5) * dd;
            num += std::pow(std::fabs(u[k + 1] - u[k]) / dd, p) * pp.core.s(mid) * dd;
        }
        for (int k = 0; k <= N; ++k) {
            double w = (k == 0 || k == N) ? 0.5 : 1.0;
            den += w * std::pow(u[k], q) * pp.core.s(k == N ? len : k * dd) * dd;
        }
        out.num = num;
        out.den = den;
        out.value = num / std::pow(den, p / q);
        return out;
    }

    // inner side: follow the annulus until its time horizon, then plateau
    const double pprime = p / (p - 1.0);
    const double delta_c = std::min(pp.t_table.depth_at(pp.T_sharp), pp.delta_star);
    const double dd = delta_c / N;
    std::vector<double> xi(N + 1), phi(N + 1);
    for (int k = 0; k <= N; ++k) {
        double delta = k == N ? delta_c : k * dd;
        double time = std::min(pp.t_table.time_at(delta), pp.T_sharp);
        xi[k] = pp.T_table.depth_at(time);
        phi[k] = f_at(A.r + xi[k]);
    }
    double num = 0.0, den = 0.0;
    for (int k = 0; k < N; ++k) {
        double dxi = xi[k + 1] - xi[k];
        if (!(dxi > 1e-300)) continue;
        double mid = (k + 0.5) * dd;
        double Smid = pp.T_table.weight_at_depth(0.5 * (xi[k] + xi[k + 1]));
        num += std::pow(std::fabs(phi[k + 1] - phi[k]) / dxi, p) * std::pow(Smid, pprime) *
               std::pow(pp.core.s(mid), 1.0 - pprime) * dd;
    }
    for (int k = 0; k <= N; ++k) {
        double w = (k == 0 || k == N) ? 0.5 : 1.0;
        den += w * std::pow(phi[k], q) * pp.core.s(k == N ? delta_c : k * dd) * dd;
    }
    double tail = std::max(pp.omega_volume - pp.core.volume_at(delta_c), 0.0);
    out.plateau_volume = tail;
    den += std::pow(phi[N], q) * tail;
    out.num = num;
    out.den = den;
    out.value = num / std::pow(den, p / q);
    return out;
}

}  // namespace zaremba
