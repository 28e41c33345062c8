#include <cmath>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "zaremba/radial.hpp"

using namespace zaremba;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("linear case agrees with the finite-difference eigensolver", "[radial]") {
    struct probe {
        int n;
        double r, R;
        boundary_side side;
    };
    const probe probes[] = {
        {3, 0.8758577656805558, 0.9799972758723656, boundary_side::inner},
        {2, 1.0, 2.0, boundary_side::inner},
        {3, 0.9893039964055199, 1.381976597885342, boundary_side::outer},
        {4, 0.7, 1.3, boundary_side::outer},
    };
    for (const auto& pb : probes) {
        auto A = make_annulus(pb.n, pb.r, pb.R, pb.side);
        auto sol = solve_radial(A, 2.0, 2.0, 512);
        REQUIRE(sol.converged);
        double fd = fd_radial_eigen(A, 512);
        REQUIRE_THAT(sol.tau, WithinRel(fd, 1e-6));
    }
}

TEST_CASE("pinned eigenvalues of the comparison annuli", "[radial]") {
    auto AI = make_annulus(3, 0.8758577656805558, 0.9799972758723656, boundary_side::inner);
    REQUIRE_THAT(solve_radial(AI, 2.0, 2.0, 512).tau, WithinRel(207.48879492086033, 1e-6));

    auto AIt = make_annulus(3, 0.975, 1.0615207608772426, boundary_side::inner);
    REQUIRE_THAT(solve_radial(AIt, 2.0, 2.0, 512).tau, WithinRel(307.468957680304, 1e-6));

    auto AO3 = make_annulus(3, 0.9893039964055199, 1.381976597885342, boundary_side::outer);
    REQUIRE_THAT(solve_radial(AO3, 2.0, 2.0, 512).tau, WithinRel(20.759363931706773, 1e-6));

    auto AO2 = make_annulus(2, 1.3076342991650065, 2.5464790894703255, boundary_side::outer);
    REQUIRE_THAT(solve_radial(AO2, 2.0, 2.0, 512).tau, WithinRel(2.0772715067020098, 1e-6));

    auto plane = make_annulus(2, 1.0, 2.0, boundary_side::inner);
    REQUIRE_THAT(solve_radial(plane, 2.0, 2.0, 512).tau, WithinRel(1.851715092444625, 1e-6));
}

TEST_CASE("a pinhole annulus approaches the solid ball", "[radial]") {
    // Neumann pinhole at the center barely perturbs the Dirichlet ball value pi^2
    auto A = make_annulus(3, 1e-3, 1.0, boundary_side::outer);
    auto sol = solve_radial(A, 2.0, 2.0, 512);
    REQUIRE_THAT(sol.tau, WithinRel(pi * pi, 5e-3));
}

TEST_CASE("nonlinear exponents keep the scaling law exact", "[radial]") {
    struct combo {
        double p, q;
    };
    for (const auto& c : {combo{2.5, 1.5}, combo{1.5, 1.0}, combo{3.0, 3.0}}) {
        auto A1 = make_annulus(3, 1.0, 2.0, boundary_side::inner);
        auto sol1 = solve_radial(A1, c.p, c.q, 256);
        REQUIRE(sol1.converged);
        for (double scale : {2.0, 0.5}) {
            auto A2 = make_annulus(3, scale * 1.0, scale * 2.0, boundary_side::inner);
            auto sol2 = solve_radial(A2, c.p, c.q, 256);
            double expo = 3.0 - c.p - 3.0 * c.p / c.q;
            // both solves share one normalized problem, so this is exact
            REQUIRE_THAT(sol2.tau, WithinRel(sol1.tau * std::pow(scale, expo), 1e-10));
        }
    }
}

TEST_CASE("eigenprofiles climb away from the Dirichlet sphere", "[radial]") {
    auto inner = solve_radial(make_annulus(3, 1.0, 2.0, boundary_side::inner), 2.5, 2.0, 256);
    REQUIRE(inner.f.front() == 0.0);
    REQUIRE(check_monotone_radial(inner));

    auto outer = solve_radial(make_annulus(2, 0.5, 1.5, boundary_side::outer), 1.5, 1.5, 256);
    REQUIRE(outer.f.back() == 0.0);
    REQUIRE(check_monotone_radial(outer));

    REQUIRE(check_monotone_radial({0.0, 1.0, 2.0}, true));
    REQUIRE_FALSE(check_monotone_radial({0.0, 1.0, 0.5}, true));
    REQUIRE_FALSE(check_monotone_radial({1.0, 1.0, 1.0}, true));  // flat is not monotone
    REQUIRE_THROWS_AS(check_monotone_radial({1.0}, true), error);
}

TEST_CASE("the physical eigenfunction is q-normalized", "[radial]") {
    auto A = make_annulus(3, 1.0, 2.0, boundary_side::inner);
    auto sol = solve_radial(A, 2.0, 2.0, 256);
    // int_Omega |u|^q = n w_n int u(rho)^q rho^{n-1} drho by construction
    double h = (A.R - A.r) / sol.N;
    double mass = 0.0;
    for (int i = 0; i <= sol.N; ++i) {
        double w = std::pow(sol.rho[i], 2) * h;
        if (i == 0 || i == sol.N) w *= 0.5;
        mass += w * sol.u[i] * sol.u[i];
    }
    mass *= 3.0 * unit_ball_volume(3);
    REQUIRE_THAT(mass, WithinRel(1.0, 1e-8));
    REQUIRE(sol.residual < 1e-3);
}

TEST_CASE("trial profiles land above the minimum", "[radial]") {
    auto A = make_annulus(2, 1.0, 2.0, boundary_side::inner);
    const int N = 4096;
    std::vector<double> lin(N + 1);
    for (int i = 0; i <= N; ++i) lin[i] = double(i) / N;  // u = rho - 1
    // closed form of the quotient for this trial function
    REQUIRE_THAT(rayleigh_quotient(A, 2.0, 2.0, lin), WithinRel(18.0 / 7.0, 1e-5));

    auto sol = solve_radial(A, 2.0, 2.0, 512);
    REQUIRE(sol.tau <= rayleigh_quotient(A, 2.0, 2.0, lin) + 1e-12);

    // invariance under rescaling the trial profile, any exponents
    std::vector<double> big = lin;
    for (auto& v : big) v *= 3.0;
    double a = rayleigh_quotient(A, 2.5, 1.5, lin);
    double b = rayleigh_quotient(A, 2.5, 1.5, big);
    REQUIRE_THAT(a, WithinRel(b, 1e-12));
}

TEST_CASE("radial solver input validation", "[radial][errors]") {
    auto A = make_annulus(3, 1.0, 2.0, boundary_side::inner);
    REQUIRE_THROWS_AS(solve_radial(A, 2.0, 2.0, 32), error);
    REQUIRE_THROWS_AS(solve_radial(A, 1.0, 1.0, 512), error);   // p must exceed 1
    REQUIRE_THROWS_AS(solve_radial(A, 2.0, 0.5, 512), error);   // q below 1
    std::vector<double> bad = {1.0, 2.0, 3.0};                  // no Dirichlet zero
    REQUIRE_THROWS_AS(rayleigh_quotient(A, 2.0, 2.0, bad), error);
}
