#include <cmath>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "zaremba/geometry.hpp"

using namespace zaremba;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

convex_body unit_cube() { return make_box({0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}); }

// regular tetrahedron with vertices (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1)
convex_body regular_tetrahedron() {
    const double s = 1.0 / std::sqrt(3.0);
    std::vector<facet> fs;
    fs.push_back({{-s, -s, -s}, s});
    fs.push_back({{-s, s, s}, s});
    fs.push_back({{s, -s, s}, s});
    fs.push_back({{s, s, -s}, s});
    return make_polytope(fs);
}

convex_body cube_as_polytope() {
    std::vector<facet> fs;
    for (int d = 0; d < 3; ++d) {
        std::vector<double> n(3, 0.0);
        n[d] = 1.0;
        fs.push_back({n, 1.0});
        n[d] = -1.0;
        fs.push_back({n, 0.0});
    }
    return make_polytope(fs);
}

}  // namespace

TEST_CASE("unit ball volume recurrence matches the Gamma closed form", "[geometry]") {
    for (int n = 1; n <= 10; ++n) {
        double closed = std::pow(pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
        REQUIRE_THAT(unit_ball_volume(n), WithinRel(closed, 1e-13));
    }
    REQUIRE_THROWS_AS(unit_ball_volume(0), error);
}

TEST_CASE("ball quermassintegrals are exact in every dimension", "[geometry]") {
    for (int n = 2; n <= 6; ++n) {
        for (double R : {0.5, 1.0, 2.0}) {
            auto Q = compute_quermassintegrals(make_ball(std::vector<double>(n, 0.0), R));
            REQUIRE(Q.dim == n);
            double wn = unit_ball_volume(n);
            for (int j = 0; j <= n; ++j)
                REQUIRE_THAT(Q.w[j], WithinAbs(wn * std::pow(R, n - j), 1e-12));
        }
    }
}

TEST_CASE("unit cube quermassintegrals", "[geometry]") {
    auto Q = compute_quermassintegrals(unit_cube());
    REQUIRE_THAT(Q.w[0], WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(Q.w[1], WithinAbs(2.0, 1e-12));
    REQUIRE_THAT(Q.w[2], WithinAbs(pi, 1e-12));
    REQUIRE_THAT(Q.w[3], WithinAbs(4.0 * pi / 3.0, 1e-12));

    // the H-polytope path (edge formula for W_2) must agree with the box path
    auto Qp = compute_quermassintegrals(cube_as_polytope());
    for (int j = 0; j <= 3; ++j) REQUIRE_THAT(Qp.w[j], WithinAbs(Q.w[j], 1e-12));
}

TEST_CASE("unit square quermassintegrals, box and polytope paths", "[geometry]") {
    auto Q = compute_quermassintegrals(make_box({0.0, 0.0}, {1.0, 1.0}));
    REQUIRE_THAT(Q.w[0], WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(Q.w[1], WithinAbs(2.0, 1e-12));
    REQUIRE_THAT(Q.w[2], WithinAbs(pi, 1e-12));

    std::vector<facet> fs = {{{1.0, 0.0}, 1.0},
                             {{-1.0, 0.0}, 0.0},
                             {{0.0, 1.0}, 1.0},
                             {{0.0, -1.0}, 0.0}};
    auto Qp = compute_quermassintegrals(make_polytope(fs));
    for (int j = 0; j <= 2; ++j) REQUIRE_THAT(Qp.w[j], WithinAbs(Q.w[j], 1e-12));
}

TEST_CASE("Steiner outer offset of the unit cube", "[geometry]") {
    const double d = 0.1;
    auto st = steiner_outer_offset(unit_cube(), d);
    REQUIRE_THAT(st.perimeter, WithinAbs(6.0 + 6.0 * pi * d + 4.0 * pi * d * d, 1e-12));
    REQUIRE_THAT(st.volume,
                 WithinAbs(1.0 + 6.0 * d + 3.0 * pi * d * d + (4.0 * pi / 3.0) * d * d * d,
                           1e-12));
    // the worked numbers usually quoted for this offset
    REQUIRE_THAT(st.perimeter, WithinAbs(8.01062, 5e-6));
    REQUIRE_THAT(st.volume, WithinAbs(1.69844, 5e-6));
}

TEST_CASE("Steiner outer offset of the unit square at delta = 1", "[geometry]") {
    auto st = steiner_outer_offset(make_box({0.0, 0.0}, {1.0, 1.0}), 1.0);
    REQUIRE_THAT(st.perimeter, WithinAbs(4.0 + 2.0 * pi, 1e-12));
    REQUIRE_THAT(st.volume, WithinAbs(5.0 + pi, 1e-12));
    REQUIRE_THROWS_AS(steiner_outer_offset(unit_cube(), -0.5), error);
}

TEST_CASE("regular tetrahedron inradius and diameter", "[geometry]") {
    auto tet = regular_tetrahedron();
    double side = 2.0 * std::sqrt(2.0);
    REQUIRE_THAT(inradius(tet), WithinAbs(side / (2.0 * std::sqrt(6.0)), 1e-9));
    REQUIRE_THAT(inradius(tet), WithinAbs(1.0 / std::sqrt(3.0), 1e-9));
    REQUIRE_THAT(diameter(tet), WithinAbs(side, 1e-9));
    REQUIRE(tet.vertices.size() == 4);
    REQUIRE(tet.edges.size() == 6);
}

TEST_CASE("reference balls by perimeter and quermass rules", "[geometry]") {
    auto K = unit_cube();
    auto Bp = reference_ball(K, ball_rule::perimeter);
    REQUIRE_THAT(perimeter(Bp), WithinRel(perimeter(K), 1e-12));
    auto Bq = reference_ball(K, ball_rule::quermass);
    // W_{n-1}(B) = w_n R, so the rule returns R = W_{n-1}(K)/w_n
    REQUIRE_THAT(Bq.radius, WithinAbs(pi / (4.0 * pi / 3.0), 1e-12));
    // perimeter rule never exceeds the quermass rule (isoperimetric direction)
    REQUIRE(Bp.radius <= Bq.radius + 1e-12);
}

TEST_CASE("inner parallel bodies shrink facets in place", "[geometry]") {
    auto box = inner_parallel_body(unit_cube(), 0.2);
    REQUIRE_THAT(volume(box), WithinAbs(0.216, 1e-12));
    REQUIRE_THAT(perimeter(box), WithinAbs(2.16, 1e-12));

    auto ball = inner_parallel_body(make_ball({0.0, 0.0, 0.0}, 1.0), 0.25);
    REQUIRE_THAT(ball.radius, WithinAbs(0.75, 1e-15));

    std::vector<facet> fs = {{{1.0, 0.0}, 1.0},
                             {{-1.0, 0.0}, 0.0},
                             {{0.0, 1.0}, 1.0},
                             {{0.0, -1.0}, 0.0}};
    auto poly = inner_parallel_body(make_polytope(fs), 0.25);
    REQUIRE_THAT(volume(poly), WithinAbs(0.25, 1e-12));

    REQUIRE_THROWS_AS(inner_parallel_body(unit_cube(), 0.0), error);
    try {
        inner_parallel_body(unit_cube(), 0.5);
        FAIL("erosion to the inradius must throw");
    } catch (const error& e) {
        REQUIRE(e.code == "empty-erosion");
    }
}

TEST_CASE("erosion of a triangle can drop facets lawfully", "[geometry]") {
    // right triangle; eroding keeps three facets but never gains any
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<facet> fs = {{{-1.0, 0.0}, 0.0}, {{0.0, -1.0}, 0.0}, {{s, s}, s}};
    auto tri = make_polytope(fs);
    REQUIRE_THAT(volume(tri), WithinAbs(0.5, 1e-12));
    double r = inradius(tri);
    auto small = inner_parallel_body(tri, 0.9 * r);
    REQUIRE(volume(small) > 0.0);
    REQUIRE(small.facets.size() <= 3);
}

TEST_CASE("membership, distance and clearance", "[geometry]") {
    auto K = unit_cube();
    REQUIRE(contains(K, {0.5, 0.5, 0.5}));
    REQUIRE_FALSE(contains(K, {1.5, 0.5, 0.5}));
    REQUIRE_THAT(distance_to_body(K, {2.0, 0.5, 0.5}), WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(distance_to_body(K, {2.0, 2.0, 0.5}), WithinAbs(std::sqrt(2.0), 1e-12));
    REQUIRE_THAT(boundary_clearance(K, {0.5, 0.5, 0.3}), WithinAbs(0.3, 1e-12));

    auto B = make_ball({1.0, 0.0}, 2.0);
    REQUIRE_THAT(distance_to_body(B, {4.0, 0.0}), WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(boundary_clearance(B, {1.0, 1.0}), WithinAbs(1.0, 1e-12));
}

TEST_CASE("extreme points, diameter and bounding boxes", "[geometry]") {
    auto sq = make_box({-2.0, -1.0}, {2.0, 1.0});
    REQUIRE(extreme_points(sq).size() == 4);
    REQUIRE_THAT(diameter(sq), WithinAbs(2.0 * std::sqrt(5.0), 1e-12));
    REQUIRE_THAT(diameter(unit_cube()), WithinAbs(std::sqrt(3.0), 1e-12));

    auto [lo, hi] = bounding_box(regular_tetrahedron());
    for (int d = 0; d < 3; ++d) {
        REQUIRE_THAT(lo[d], WithinAbs(-1.0, 1e-9));
        REQUIRE_THAT(hi[d], WithinAbs(1.0, 1e-9));
    }
    auto [blo, bhi] = bounding_box(make_ball({1.0, 2.0}, 0.5));
    REQUIRE_THAT(blo[0], WithinAbs(0.5, 1e-15));
    REQUIRE_THAT(bhi[1], WithinAbs(2.5, 1e-15));
}

TEST_CASE("construction rejects malformed bodies", "[geometry][errors]") {
    REQUIRE_THROWS_AS(make_ball({0.0, 0.0}, 0.0), error);
    REQUIRE_THROWS_AS(make_ball({0.0, 0.0}, -1.0), error);
    REQUIRE_THROWS_AS(make_box({0.0, 0.0}, {1.0, -1.0}), error);
    REQUIRE_THROWS_AS(make_box({0.0}, {1.0, 1.0}), error);

    // two halfspaces leave an unbounded slab
    std::vector<facet> slab = {{{1.0, 0.0}, 1.0}, {{-1.0, 0.0}, 1.0}};
    REQUIRE_THROWS_AS(make_polytope(slab), error);

    // normals must be unit
    std::vector<facet> bad = {{{2.0, 0.0}, 1.0},
                              {{-1.0, 0.0}, 1.0},
                              {{0.0, 1.0}, 1.0},
                              {{0.0, -1.0}, 1.0}};
    REQUIRE_THROWS_AS(make_polytope(bad), error);

    // H-polytopes exist only in dim 2 and 3 here
    std::vector<facet> four;
    for (int d = 0; d < 4; ++d) {
        std::vector<double> n(4, 0.0);
        n[d] = 1.0;
        four.push_back({n, 1.0});
        n[d] = -1.0;
        four.push_back({n, 1.0});
    }
    try {
        make_polytope(four);
        FAIL("4-D H-polytope must be rejected");
    } catch (const error& e) {
        REQUIRE(e.code == "unsupported-dimension");
    }
}
