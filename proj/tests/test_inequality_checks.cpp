#include <cmath>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "zaremba/inequalities.hpp"

using namespace zaremba;
using Catch::Matchers::WithinAbs;

namespace {

convex_body unit_cube() { return make_box({0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}); }
convex_body unit_square() { return make_box({0.0, 0.0}, {1.0, 1.0}); }

}  // namespace

TEST_CASE("radius chain of the unit cube", "[inequalities]") {
    auto rep = check_alexandrov_fenchel(unit_cube());
    REQUIRE(rep.pass);
    REQUIRE(rep.extra.size() == 3);
    // r_j = (W_j / w_n)^{1/(n-j)}: volume radius, area radius, mean-width radius
    REQUIRE_THAT(rep.extra[0], WithinAbs(std::cbrt(3.0 / (4.0 * pi)), 1e-12));
    REQUIRE_THAT(rep.extra[1], WithinAbs(std::sqrt(3.0 / (2.0 * pi)), 1e-12));
    REQUIRE_THAT(rep.extra[2], WithinAbs(0.75, 1e-12));
    REQUIRE_THAT(rep.extra[0], WithinAbs(0.620350, 1e-6));
    REQUIRE_THAT(rep.extra[1], WithinAbs(0.690988, 1e-6));
    // the chain must be reported nondecreasing through its samples
    for (const auto& s : rep.samples) REQUIRE(s.slack >= -rep.tolerance);
}

TEST_CASE("radius chain collapses on balls", "[inequalities]") {
    for (int n = 2; n <= 5; ++n) {
        auto rep = check_alexandrov_fenchel(make_ball(std::vector<double>(n, 0.0), 1.7));
        REQUIRE(rep.pass);
        for (double rj : rep.extra) REQUIRE_THAT(rj, WithinAbs(1.7, 1e-12));
    }
}

TEST_CASE("inner parallel perimeter bound on the unit square", "[inequalities]") {
    auto rep = check_nagy_inner(unit_square(), {0.25});
    REQUIRE(rep.pass);
    REQUIRE(rep.samples.size() == 1);
    const auto& s = rep.samples[0];
    REQUIRE_THAT(s.lhs, WithinAbs(2.0, 1e-12));                        // P([0.25,0.75]^2)
    REQUIRE_THAT(s.rhs, WithinAbs(2.0 * pi * (2.0 / pi - 0.25), 1e-12));
    REQUIRE_THAT(s.slack, WithinAbs(4.0 - pi / 2.0 - 2.0, 1e-12));
}

TEST_CASE("inner parallel perimeter bound on the unit cube", "[inequalities]") {
    auto rep = check_nagy_inner(unit_cube(), {0.25});
    REQUIRE(rep.pass);
    const auto& s = rep.samples[0];
    double Rsharp = std::sqrt(6.0 / (4.0 * pi));
    REQUIRE_THAT(s.lhs, WithinAbs(1.5, 1e-12));
    REQUIRE_THAT(s.rhs, WithinAbs(4.0 * pi * (Rsharp - 0.25) * (Rsharp - 0.25), 1e-12));
    REQUIRE(s.slack > 0.0);

    // default offsets stay strictly inside (0, inradius) and all pass
    auto def = check_nagy_inner(unit_cube());
    REQUIRE(def.pass);
    REQUIRE(def.samples.size() == 16);
}

TEST_CASE("inner bound is tight on balls", "[inequalities]") {
    auto rep = check_nagy_inner(make_ball({0.0, 0.0, 0.0}, 1.0));
    REQUIRE(rep.pass);
    for (const auto& s : rep.samples) REQUIRE_THAT(s.slack, WithinAbs(0.0, 1e-12));
}

TEST_CASE("inner bound rejects offsets outside (0, inradius)", "[inequalities][errors]") {
    try {
        check_nagy_inner(unit_square(), {0.5});
        FAIL("offset at the inradius must throw");
    } catch (const error& e) {
        REQUIRE(e.code == "invalid-delta");
    }
    REQUIRE_THROWS_AS(check_nagy_inner(unit_square(), {-0.1}), error);
}

TEST_CASE("reverse outer perimeter bound on the unit cube", "[inequalities]") {
    auto rep = check_nagy_outer(unit_cube(), {1.0}, outer_mode::reverse_perimeter);
    REQUIRE(rep.name == "reverse_outer_perimeter");
    REQUIRE(rep.pass);
    const auto& s = rep.samples[0];
    double Rsharp = std::sqrt(6.0 / (4.0 * pi));
    REQUIRE_THAT(s.lhs, WithinAbs(6.0 + 10.0 * pi, 1e-12));
    REQUIRE_THAT(s.rhs, WithinAbs(4.0 * pi * (Rsharp + 1.0) * (Rsharp + 1.0), 1e-12));
    // the worked slack value for this offset: (6 + 10pi) - 4pi(1.690988)^2
    REQUIRE_THAT(s.slack, WithinAbs(6.0 + 10.0 * pi - 4.0 * pi * 1.690988 * 1.690988, 1e-4));

    auto def = check_nagy_outer(unit_cube());
    REQUIRE(def.pass);
    REQUIRE(def.samples.size() == 16);
}

TEST_CASE("reverse outer bound needs dim >= 3", "[inequalities][errors]") {
    try {
        check_nagy_outer(unit_square(), {1.0}, outer_mode::reverse_perimeter);
        FAIL("reverse mode in the plane must throw");
    } catch (const error& e) {
        REQUIRE(e.code == "unsupported-dimension");
    }
}

TEST_CASE("quermass outer bound, strict in 3-D and an identity in 2-D", "[inequalities]") {
    auto cube = check_nagy_outer(unit_cube(), {1.0}, outer_mode::quermass);
    REQUIRE(cube.name == "outer_quermass_perimeter");
    REQUIRE(cube.pass);
    const auto& c = cube.samples[0];
    REQUIRE_THAT(c.rhs, WithinAbs(4.0 * pi * 1.75 * 1.75, 1e-12));
    REQUIRE_THAT(c.slack, WithinAbs(4.0 * pi * 1.75 * 1.75 - 6.0 - 10.0 * pi, 1e-12));
    REQUIRE(c.slack > 0.0);

    // in the plane P(K_delta) = P(K) + 2 pi delta makes the bound an identity
    auto sq = check_nagy_outer(unit_square(), {}, outer_mode::quermass);
    REQUIRE(sq.pass);
    REQUIRE_THAT(sq.tolerance, WithinAbs(1e-12, 1e-18));
    for (const auto& s : sq.samples) REQUIRE_THAT(s.slack, WithinAbs(0.0, 1e-12));
}

TEST_CASE("perimeter derivative bound on the unit cube", "[inequalities]") {
    auto rep = check_inner_derivative(unit_cube(), {0.1});
    REQUIRE(rep.pass);
    const auto& s = rep.samples[0];
    // P(K_{-t}) = 6 (1-2t)^2 is quadratic, so the central difference is exact
    REQUIRE_THAT(s.lhs, WithinAbs(19.2, 1e-9));
    REQUIRE_THAT(s.rhs, WithinAbs(4.8 * pi, 1e-12));
    REQUIRE(s.slack > 0.0);

    auto def = check_inner_derivative(unit_cube());
    REQUIRE(def.pass);
    REQUIRE_FALSE(def.samples.empty());
}

TEST_CASE("perimeter derivative bound is tight on balls", "[inequalities]") {
    auto rep = check_inner_derivative(make_ball({0.0, 0.0, 0.0}, 1.0), {0.3});
    REQUIRE(rep.pass);
    REQUIRE_THAT(rep.samples[0].slack, WithinAbs(0.0, 1e-9));

    auto plane = check_inner_derivative(make_ball({0.0, 0.0}, 1.0), {0.4});
    REQUIRE(plane.pass);
    REQUIRE_THAT(plane.samples[0].slack, WithinAbs(0.0, 1e-9));
}

TEST_CASE("explicit stencils outside the body are rejected", "[inequalities][errors]") {
    try {
        check_inner_derivative(unit_cube(), {0.005});  // t - h < 0 with h = 0.01
        FAIL("stencil through zero must throw");
    } catch (const error& e) {
        REQUIRE(e.code == "invalid-stencil");
    }
    REQUIRE_THROWS_AS(check_inner_derivative(unit_cube(), {0.499}), error);
}

TEST_CASE("random polytopes are deterministic in the seed", "[inequalities][random]") {
    splitmix64 a(12345), b(12345), c(54321);
    auto Ka = random_convex_polytope(3, 12, a);
    auto Kb = random_convex_polytope(3, 12, b);
    auto Kc = random_convex_polytope(3, 12, c);
    REQUIRE(Ka.facets.size() == Kb.facets.size());
    for (std::size_t i = 0; i < Ka.facets.size(); ++i) {
        REQUIRE(Ka.facets[i].offset == Kb.facets[i].offset);
        for (int d = 0; d < 3; ++d)
            REQUIRE(Ka.facets[i].normal[d] == Kb.facets[i].normal[d]);
    }
    REQUIRE(volume(Ka) != volume(Kc));  // different stream, different body
}

TEST_CASE("random polytopes satisfy the full battery", "[inequalities][random]") {
    for (int dim : {2, 3}) {
        for (std::uint64_t k = 0; k < 8; ++k) {
            splitmix64 rng(batch_seed(99, k + (dim == 2 ? 0 : 500)));
            int nf = 2 * dim + 2 + int(rng.uniform() * 16.0);
            auto K = random_convex_polytope(dim, nf, rng);
            REQUIRE(K.dim == dim);
            REQUIRE(inradius(K) >= 0.5 - 1e-9);  // circumscribed about r = scale >= 0.5
            REQUIRE(check_alexandrov_fenchel(K).pass);
            REQUIRE(check_nagy_inner(K).pass);
            REQUIRE(check_nagy_outer(K, {}, outer_mode::quermass).pass);
            if (dim == 3) {
                auto rp = check_nagy_outer(K, {}, outer_mode::reverse_perimeter);
                REQUIRE(rp.pass);
                REQUIRE(rp.worst_slack() > 1e-9);  // strictly positive off the ball
            }
            REQUIRE(check_inner_derivative(K).pass);
        }
    }
}

TEST_CASE("random polytope generator validates its arguments", "[inequalities][errors]") {
    splitmix64 rng(7);
    REQUIRE_THROWS_AS(random_convex_polytope(4, 10, rng), error);
    REQUIRE_THROWS_AS(random_convex_polytope(1, 10, rng), error);
    REQUIRE_THROWS_AS(random_convex_polytope(3, 3, rng), error);
}
