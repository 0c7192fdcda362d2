#include <cmath>

#include "doctest.h"
#include "plankton/model.hpp"
#include "plankton/rng.hpp"
#include "support/oracles.hpp"

using namespace plankton;

TEST_CASE("params validation") {
    CHECK_THROWS_AS((ModelParams{-0.5, 1.0, 2.0, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ModelParams{0.5, 0.0, 2.0, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ModelParams{0.5, 1.0, 2.0, 3}.validate()), std::invalid_argument);
    CHECK_NOTHROW((ModelParams{0.5, 1.0, -4.0, 2}.validate()));  // any real gamma
}

TEST_CASE("step fixes the boundary points") {
    const ModelParams p{0.5, 1.0, 2.0, 1};
    auto [e0, e1] = boundary_fixed_points();
    CHECK(step(p, e0).u == 0.0);
    CHECK(step(p, e0).v == 0.0);
    CHECK(step(p, e1).u == 1.0);
    CHECK(step(p, e1).v == 0.0);
}

TEST_CASE("step matches the worked remark point") {
    const ModelParams p{0.5, 19.0, 10.0, 1};
    const State s1 = step(p, {0.1, 4.62});
    CHECK(s1.u == doctest::Approx(0.0306897).epsilon(1e-5));
    CHECK(s1.v == doctest::Approx(3.9031034).epsilon(1e-5));
}

TEST_CASE("jacobian closed forms at the boundary points") {
    const ModelParams p{0.7, 1.3, 1.9, 1};
    const Jacobian j0 = jacobian(p, {0.0, 0.0});
    CHECK(j0.j11 == 2.0);
    CHECK(j0.j12 == 0.0);
    CHECK(j0.j21 == 0.0);
    CHECK(j0.j22 == doctest::Approx(1.0 - p.r).epsilon(1e-15));

    const Jacobian j1 = jacobian(p, {1.0, 0.0});
    CHECK(j1.j11 == doctest::Approx(0.0));
    CHECK(j1.j12 == doctest::Approx(-1.0 / (1.0 + p.c)).epsilon(1e-15));
    CHECK(j1.j21 == 0.0);
    CHECK(j1.j22 == doctest::Approx(p.gamma / (1.0 + p.c) + 1.0 - p.r).epsilon(1e-15));
}

TEST_CASE("jacobian agrees with central differences") {
    const ModelParams p{0.5, 1.0, 1.8, 1};
    const State s{0.4, 0.8};
    const Jacobian a = jacobian(p, s);
    const Jacobian f = oracles::fd_jacobian(p, s);
    CHECK(std::fabs(a.j11 - f.j11) < 1e-6);
    CHECK(std::fabs(a.j12 - f.j12) < 1e-6);
    CHECK(std::fabs(a.j21 - f.j21) < 1e-6);
    CHECK(std::fabs(a.j22 - f.j22) < 1e-6);
}

TEST_CASE("u^0 convention keeps the h=1 jacobian finite on the v axis") {
    const ModelParams p{0.5, 1.0, 1.9, 1};
    const State s{0.0, 0.5};
    const Jacobian a = jacobian(p, s);
    CHECK(a.j11 == doctest::Approx(2.0 - s.v).epsilon(1e-14));
    CHECK(a.j21 == doctest::Approx(p.gamma * s.v).epsilon(1e-14));
    // matches the analytic limit (finite differences straddle u = 0)
    const Jacobian f = oracles::fd_jacobian(p, s);
    CHECK(std::fabs(a.j11 - f.j11) < 1e-6);
    CHECK(std::fabs(a.j21 - f.j21) < 1e-6);
}

TEST_CASE("jacobian vs finite differences on the verification grid") {
    // 10x10 grid over [0.05,1]x[0,2], both response orders
    for (int h : {1, 2}) {
        const ModelParams p{0.5, 1.0, 1.8, h};
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                const State s{0.05 + 0.95 * i / 9.0, 2.0 * j / 9.0};
                const Jacobian a = jacobian(p, s);
                const Jacobian f = oracles::fd_jacobian(p, s);
                const double entries[4][2] = {{a.j11, f.j11}, {a.j12, f.j12},
                                              {a.j21, f.j21}, {a.j22, f.j22}};
                for (auto& e : entries)
                    CHECK(std::fabs(e[0] - e[1]) <= 1e-5 * std::max(std::fabs(e[0]), 0.01));
            }
    }
}

TEST_CASE("positive fixed point closed form") {
    SUBCASE("h=1 reference parameters") {
        const double g0 = (3.0 + std::sqrt(17.0)) / 4.0;
        const auto fp = positive_fixed_point({0.5, 1.0, g0, 1});
        REQUIRE(fp.has_value());
        CHECK(std::fabs(fp->u - 0.3906) < 5e-4);
        CHECK(std::fabs(fp->v - 0.8474) < 5e-4);
    }
    SUBCASE("h=2 reference parameters") {
        const auto fp = positive_fixed_point({0.8, 2.0, 6.3, 2});
        REQUIRE(fp.has_value());
        CHECK(std::fabs(fp->u - 0.4125) < 5e-4);
        CHECK(std::fabs(fp->v - 1.9085) < 5e-4);
    }
    SUBCASE("absent at the existence threshold") {
        CHECK_FALSE(positive_fixed_point({0.5, 1.0, 1.0, 1}).has_value());
        CHECK_FALSE(positive_fixed_point({0.5, 1.0, 0.2, 1}).has_value());
    }
}

TEST_CASE("positive fixed point is a fixed point to 1e-12") {
    Rng rng(42);
    for (int h : {1, 2}) {
        int found = 0;
        for (int k = 0; k < 200; ++k) {
            const double r = rng.uniform(0.05, 1.0);
            const double c = rng.uniform(0.05, 2.0);
            const double gamma = r * (1.0 + c) + rng.uniform(0.01, 4.0);
            const ModelParams p{r, c, gamma, h};
            const auto fp = positive_fixed_point(p);
            REQUIRE(fp.has_value());
            ++found;
            const State img = step(p, *fp);
            CHECK(std::fabs(img.u - fp->u) < 1e-12);
            CHECK(std::fabs(img.v - fp->v) < 1e-12);
        }
        CHECK(found == 200);
    }
}

TEST_CASE("nonnegativity condition cases") {
    CHECK(nonnegativity_condition({0.5, 1.0, 2.0, 1}));    // gamma > 0, r <= 1
    CHECK_FALSE(nonnegativity_condition({1.5, 1.0, 2.0, 1}));
    CHECK(nonnegativity_condition({0.5, 1.0, -0.5, 1}));   // 0.5 <= 1.5/2
    CHECK_FALSE(nonnegativity_condition({0.8, 1.0, -0.5, 1}));
    CHECK(nonnegativity_condition({0.5, 2.0, -1.5, 1}));   // case (a): c >= 0.5, cap = 1.5/3
    CHECK_FALSE(nonnegativity_condition({0.5, 0.2, -1.5, 1}));  // c < -1-gamma
}

TEST_CASE("nonnegativity condition implies v' >= 0 on the strip") {
    Rng rng(7);
    for (int h : {1, 2}) {
        const ModelParams sets[] = {{0.5, 1.0, 2.0, h}, {0.5, 1.0, -0.5, h}, {1.0, 0.7, 0.4, h}};
        for (const auto& p : sets) {
            REQUIRE(nonnegativity_condition(p));
            for (int k = 0; k < 1000; ++k) {
                const State s{rng.uniform(0.0, 1.0), rng.uniform(0.0, 5.0)};
                CHECK(step(p, s).v >= 0.0);
            }
        }
    }
}

TEST_CASE("u' stays nonnegative below the membership parabola") {
    Rng rng(11);
    for (int h : {1, 2}) {
        const ModelParams p{0.5, 1.3, 2.2, h};
        for (int k = 0; k < 2000; ++k) {
            const double u = rng.uniform(0.0, 1.0);
            const double uh = response_pow(u, h);
            const double cap = u > 0.0 ? (2.0 - u) * (1.0 + p.c * uh) * u / uh
                                       : (h == 1 ? 2.0 : 1.0);
            const State s{u, rng.uniform(0.0, 1.0) * cap};
            CHECK(step(p, s).u >= -1e-15);
        }
    }
}
