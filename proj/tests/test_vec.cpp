#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mink/rng.hpp"
#include "mink/vec.hpp"

using namespace mink;

TEST_CASE("metric") {
    CHECK(mink_dot({0, 0, 1}, {0, 0, 1}) == -1.0);
    CHECK(mink_dot({1, 0, 0}, {0, 1, 0}) == 0.0);
    CHECK(mink_dot({1, 2, 3}, {4, 5, 6}) == -4.0);

    SUBCASE("bilinear and symmetric") {
        SplitMix64 rng(7);
        for (int i = 0; i < 50; ++i) {
            const MinkVec3 x{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
            const MinkVec3 y{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
            const MinkVec3 z{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
            const double s = rng.uniform(-3, 3);
            CHECK(mink_dot(x, y) == mink_dot(y, x));
            CHECK(mink_dot(x + y, z)
                  == doctest::Approx(mink_dot(x, z) + mink_dot(y, z)).epsilon(1e-13));
            CHECK(mink_dot(s * x, y) == doctest::Approx(s * mink_dot(x, y)).epsilon(1e-13));
        }
    }
}

TEST_CASE("pseudo norm") {
    CHECK(pseudo_norm({0, 0, 0}) == 0.0);
    CHECK(pseudo_norm({0, 0, 2}) == 2.0);
    CHECK(pseudo_norm({1, 1, 1}) == 1.0);
}

TEST_CASE("causal character") {
    CHECK(causal_character({1, 0, 0}) == CausalCharacter::SpaceLike);
    CHECK(causal_character({0, 0, 1}) == CausalCharacter::TimeLike);
    CHECK(causal_character({1, 0, 1}) == CausalCharacter::LightLike);
    CHECK(causal_character({0, 0, 0}) == CausalCharacter::SpaceLike);
    CHECK(causal_character({3, 4, 5}) == CausalCharacter::LightLike);
}

TEST_CASE("cross product") {
    const MinkVec3 c = mink_cross({1, 0, 0}, {0, 1, 0});
    CHECK(c.x1 == 0.0);
    CHECK(c.x2 == 0.0);
    CHECK(c.x3 == -1.0);

    SUBCASE("x cross x vanishes") {
        const MinkVec3 x{0.3, -1.7, 2.9};
        const MinkVec3 z = mink_cross(x, x);
        CHECK(euclid_norm(z) == 0.0);
    }

    SUBCASE("tangent indicatrix of the unit circle") {
        for (double v : {0.0, 0.4, 1.3, 2.9, 5.1}) {
            const MinkVec3 f{std::sin(v), std::cos(v), 0.0};
            const MinkVec3 fp{std::cos(v), -std::sin(v), 0.0};
            const MinkVec3 w = mink_cross(f, fp);
            CHECK(w.x1 == 0.0);
            CHECK(w.x2 == 0.0);
            CHECK(w.x3 == doctest::Approx(1.0).epsilon(1e-15));
        }
    }
}

TEST_CASE("sphere membership") {
    CHECK(on_de_sitter({1, 0, 0}, 1e-12));
    CHECK(on_hyperbolic({0, 0, 1}, 1e-12));
    CHECK(on_de_sitter({std::sqrt(2.0), 0, 1}, 1e-12));
    CHECK_FALSE(on_de_sitter({2, 0, 0}, 1e-12));
    CHECK_FALSE(on_hyperbolic({2, 0, 0}, 1e-12));
}

// properties (i)-(v) of the cross product on random triples
TEST_CASE("cross product identities") {
    SplitMix64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        const MinkVec3 x{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const MinkVec3 y{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const MinkVec3 z{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const double scale =
            std::max(1.0, euclid_norm(x) * euclid_norm(y) * euclid_norm(z));

        // (i) <x^y, z> = det(x,y,z)
        CHECK(std::fabs(mink_dot(mink_cross(x, y), z) - det3(x, y, z)) / scale < 1e-12);
        // (ii) antisymmetry, exact
        const MinkVec3 anti = mink_cross(x, y) + mink_cross(y, x);
        CHECK(euclid_norm(anti) == 0.0);
        // (iii) (x^y)^z + <x,z>y - <y,z>x = 0
        const MinkVec3 triple = mink_cross(mink_cross(x, y), z)
                              + mink_dot(x, z) * y - mink_dot(y, z) * x;
        CHECK(euclid_norm(triple) / scale < 1e-12);
        // (iv) orthogonality
        CHECK(std::fabs(mink_dot(mink_cross(x, y), x)) / scale < 1e-12);
        CHECK(std::fabs(mink_dot(mink_cross(x, y), y)) / scale < 1e-12);
        // (v) Lagrange identity with the Lorentzian sign
        const MinkVec3 c = mink_cross(x, y);
        const double lhs = mink_dot(c, c);
        const double rhs = -mink_dot(x, x) * mink_dot(y, y) + mink_dot(x, y) * mink_dot(x, y);
        CHECK(std::fabs(lhs - rhs) / (scale * scale) < 1e-12);
    }
}
