#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>

#include "mink/curve.hpp"
#include "mink/random_curve.hpp"
#include "mink/rng.hpp"

using namespace mink;

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

TEST_CASE("preset evaluation") {
    SUBCASE("example_336 at v=0") {
        const CurveSample s = eval_curve(preset("example_336"), 0.0);
        CHECK(s.position.x1 == 0.0);
        CHECK(s.position.x2 == 1.0);
        CHECK(s.position.x3 == 0.0);
        CHECK(s.d1.x1 == 1.0);
        CHECK(s.d1.x2 == 0.0);
        CHECK(s.d1.x3 == 0.0);
    }
    SUBCASE("example_46 at v=0") {
        const CurveSample s = eval_curve(preset("example_46"), 0.0);
        CHECK(s.position.x1 == 0.0);
        CHECK(s.position.x2 == 0.0);
        CHECK(s.position.x3 == 1.0);
        CHECK(s.d1.x1 == 1.0);
        CHECK(s.d1.x2 == 0.0);
        CHECK(s.d1.x3 == 0.0);
    }
    SUBCASE("pseudo_circle_s12(sqrt 2) at v=0") {
        const std::array<double, 1> c{kSqrt2};
        const CurveSpec spec = preset("pseudo_circle_s12", c);
        const CurveSample s = eval_curve(spec, 0.0);
        CHECK(s.position.x1 == doctest::Approx(kSqrt2).epsilon(1e-15));
        CHECK(s.position.x2 == 0.0);
        CHECK(s.position.x3 == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(s.d1.x1 == 0.0);
        CHECK(s.d1.x2 == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(s.d1.x3 == 0.0);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(preset("nope"), UnknownPreset);
        const std::array<double, 1> bad{0.9};
        CHECK_THROWS_AS(preset("pseudo_circle_s12", bad), BadParameter);
        CHECK_THROWS_AS(preset("pseudo_circle_h2"), BadParameter);
    }
}

TEST_CASE("sphere and unit-speed validation") {
    const std::array<double, 1> c{kSqrt2};
    CHECK(validate_on_sphere(preset("example_336"), 1000) < 1e-12);
    CHECK(validate_on_sphere(preset("example_46"), 1000) < 1e-12);
    CHECK(validate_on_sphere(preset("pseudo_circle_s12", c), 1000) < 1e-12);
    CHECK(validate_on_sphere(preset("pseudo_circle_h2", c), 1000) < 1e-12);

    CHECK(validate_unit_speed(preset("example_336"), 1000) < 1e-12);
    CHECK(validate_unit_speed(preset("example_46"), 1000) < 1e-12);
    CHECK(validate_unit_speed(preset("pseudo_circle_s12", c), 1000) < 1e-12);
    CHECK(validate_unit_speed(preset("pseudo_circle_h2", c), 1000) < 1e-12);

    SUBCASE("a line is not on the sphere") {
        CurveSpec line;
        line.space = Space::S12;
        line.x = parse_expression("v");
        line.y = parse_expression("0");
        line.z = parse_expression("0");
        line.domain = {0.0, 2.0};
        CHECK(validate_on_sphere(line, 100) == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("a doubled-speed line is not unit speed") {
        CurveSpec line;
        line.space = Space::Free;
        line.x = parse_expression("2*v");
        line.y = parse_expression("0");
        line.z = parse_expression("0");
        line.domain = {0.0, 1.0};
        CHECK(validate_unit_speed(line, 100) == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("free curves cannot be sphere-validated") {
        CurveSpec line;
        line.space = Space::Free;
        line.x = parse_expression("v");
        line.y = parse_expression("0");
        line.z = parse_expression("0");
        line.domain = {0.0, 1.0};
        CHECK_THROWS_AS(validate_on_sphere(line, 10), BadParameter);
    }
}

TEST_CASE("curve files") {
    SUBCASE("well-formed") {
        const CurveSpec spec = parse_curve_file(
            "# the S12 circle\n"
            "space = S12\n"
            "x = \"sin(v)\"\n"
            "y = \"cos(v)\"   # tangent turns clockwise\n"
            "z = \"0\"\n"
            "domain = 0 6.283185307179586\n");
        CHECK(spec.space == Space::S12);
        CHECK(spec.domain.lo == 0.0);
        CHECK(validate_on_sphere(spec, 100) < 1e-12);
    }
    SUBCASE("comma-separated domain") {
        const CurveSpec spec = parse_curve_file(
            "space = Free\nx = \"v\"\ny = \"0\"\nz = \"0\"\ndomain = -1, 1\n");
        CHECK(spec.domain.lo == -1.0);
        CHECK(spec.domain.hi == 1.0);
    }
    SUBCASE("unknown key") {
        CHECK_THROWS_AS(parse_curve_file("space = S12\nspeed = 3\n"), ParseError);
    }
    SUBCASE("missing key") {
        CHECK_THROWS_AS(parse_curve_file("space = S12\nx = \"v\"\n"), ParseError);
    }
    SUBCASE("unquoted expression") {
        CHECK_THROWS_AS(parse_curve_file("space = S12\nx = v\n"), ParseError);
    }
    SUBCASE("bad domain") {
        CHECK_THROWS_AS(
            parse_curve_file("space = S12\nx = \"v\"\ny = \"v\"\nz = \"v\"\ndomain = 1\n"),
            ParseError);
        CHECK_THROWS_AS(parse_curve_file(
                            "space = S12\nx = \"v\"\ny = \"v\"\nz = \"v\"\ndomain = 2 1\n"),
                        BadParameter);
    }
}

// the sample files shipped with the repository stay parseable and valid
TEST_CASE("shipped curve files") {
    std::ifstream circle(std::string(MINK_CURVE_SAMPLES_DIR) + "/fast_circle_s12.txt");
    REQUIRE(circle.good());
    const CurveSpec fast = parse_curve_file(circle);
    CHECK(fast.space == Space::S12);
    CHECK(validate_on_sphere(fast, 200) < 1e-12);
    CHECK(validate_unit_speed(fast, 10) > 1.0); // deliberately not unit speed
    CHECK(validate_unit_speed(reparametrize_unit_speed(fast), 200) < 1e-12);

    std::ifstream wavy(std::string(MINK_CURVE_SAMPLES_DIR) + "/wavy_h2.txt");
    REQUIRE(wavy.good());
    const CurveSpec spec = parse_curve_file(wavy);
    CHECK(spec.space == Space::H2);
    CHECK(validate_on_sphere(spec, 200) < 1e-12);
}

TEST_CASE("arc-length reparametrization") {
    SUBCASE("identity on an already unit-speed curve") {
        const CurveSpec spec = preset("example_336");
        const Curve unit = reparametrize_unit_speed(spec, 1e-10);
        CHECK(unit.domain().lo == 0.0);
        CHECK(unit.domain().hi == doctest::Approx(2 * std::numbers::pi).epsilon(1e-10));
        for (double s : {0.0, 0.7, 2.9, 5.5}) {
            const CurveSample got = unit.sample(s);
            const CurveSample want = eval_curve(spec, s);
            CHECK(euclid_dist(got.position, want.position) < 1e-9);
            CHECK(euclid_dist(got.d1, want.d1) < 1e-8);
            CHECK(std::fabs(mink_dot(got.d1, got.d1) - 1.0) < 1e-12);
        }
    }
    SUBCASE("doubled-speed circle collapses onto the unit-speed one") {
        CurveSpec fast;
        fast.space = Space::S12;
        fast.x = parse_expression("sin(2*v)");
        fast.y = parse_expression("cos(2*v)");
        fast.z = parse_expression("0");
        fast.domain = {0.0, std::numbers::pi};
        const Curve unit = reparametrize_unit_speed(fast, 1e-10);
        const CurveSpec slow = preset("example_336");
        for (double s : {0.1, 1.0, 2.5, 4.4}) {
            CHECK(euclid_dist(unit.sample(s).position, eval_curve(slow, s).position)
                  < 1e-8);
        }
        CHECK(validate_unit_speed(unit, 100) < 1e-9);
    }
    SUBCASE("light-like direction is rejected") {
        CurveSpec bad;
        bad.space = Space::Free;
        bad.x = parse_expression("v");
        bad.y = parse_expression("0");
        bad.z = parse_expression("v");
        bad.domain = {0.0, 1.0};
        CHECK_THROWS_AS(reparametrize_unit_speed(bad, 1e-10), DegenerateSpeed);
    }
    SUBCASE("time-like tangent is rejected") {
        CurveSpec bad;
        bad.space = Space::Free;
        bad.x = parse_expression("0");
        bad.y = parse_expression("0");
        bad.z = parse_expression("2*v");
        bad.domain = {0.0, 1.0};
        CHECK_THROWS_AS(reparametrize_unit_speed(bad, 1e-10), WrongCausalType);
    }
}

// the reparametrized evaluator is unit speed at random parameters on random
// smooth curves
TEST_CASE("reparametrization property") {
    const double tol = 1e-10;
    SplitMix64 rng(5150);
    for (int k = 0; k < 20; ++k) {
        const Space space = k % 2 == 0 ? Space::S12 : Space::H2;
        const Curve unit = random_spherical_curve(space, RandomCurveKind::Generic,
                                                  1000 + std::uint64_t(k));
        const double target = space == Space::S12 ? 1.0 : -1.0;
        for (int i = 0; i < 100; ++i) {
            const double s = rng.uniform(unit.domain().lo, unit.domain().hi);
            const CurveSample c = unit.sample(s);
            CHECK(std::fabs(mink_dot(c.d1, c.d1) - 1.0) < 10 * tol);
            CHECK(std::fabs(mink_dot(c.position, c.position) - target) < 1e-12);
        }
    }
}

TEST_CASE("random high-curvature curves") {
    for (int k = 0; k < 6; ++k) {
        const Space space = k % 2 == 0 ? Space::S12 : Space::H2;
        RandomCurveOptions opts;
        opts.min_kg_sq = 1.1;
        const Curve unit = random_spherical_curve(space, RandomCurveKind::HighCurvature,
                                                  7000 + std::uint64_t(k), opts);
        const KappaGRange kg = kappa_g_range(unit, 41);
        CHECK(std::min(kg.min * kg.min, kg.max * kg.max) >= 1.1);
        CHECK(kg.min * kg.max > 0.0); // no sign change
        CHECK(validate_unit_speed(unit, 100) < 1e-12);
        CHECK(validate_on_sphere(unit, 100) < 1e-12);
    }
}
