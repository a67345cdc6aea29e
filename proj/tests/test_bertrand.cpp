#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "mink/bertrand.hpp"
#include "mink/curve.hpp"
#include "mink/random_curve.hpp"
#include "support/closed_forms.hpp"

using namespace mink;

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

TEST_CASE("bertrand_point reproduces the closed forms") {
    SUBCASE("space-like construction") {
        const Curve f = preset("example_336").evaluator();
        const auto cf = minktest::example336_bertrand();
        for (double v : {0.0, 0.9, 2.5, 4.8, 6.2}) {
            const MinkVec3 got = bertrand_point(f, cf.cfg, v, 1e-10);
            const MinkVec3 want = cf.curve.sample(v).position;
            CHECK(max_abs_component(got - want) < 1e-8);
        }
    }
    SUBCASE("time-like construction") {
        const Curve g = preset("example_46").evaluator();
        const auto cf = minktest::example46_bertrand();
        for (double v : {0.0, 0.4, 1.1, 1.9}) {
            const MinkVec3 got = bertrand_point(g, cf.cfg, v, 1e-10);
            const MinkVec3 want = cf.curve.sample(v).position;
            CHECK(max_abs_component(got - want) < 1e-8);
        }
    }
    SUBCASE("empty integral at the base point") {
        const Curve f = preset("example_336").evaluator();
        const MinkVec3 zero = bertrand_point(f, {1.3, 0.4, Space::S12}, 0.0);
        CHECK(euclid_norm(zero) == 0.0);
    }
    SUBCASE("base point must be inside the domain") {
        Curve shifted(Space::S12, {1.0, 2.0}, [](double v) {
            return preset("example_336").evaluator().sample(v);
        });
        CHECK_THROWS_AS(bertrand_point(shifted, {1.0, 0.3, Space::S12}, 1.5),
                        BadParameter);
    }
    SUBCASE("polyline matches pointwise integration") {
        const Curve f = preset("example_336").evaluator();
        const BertrandConfig cfg{1.7, 0.35, Space::S12};
        const std::vector<double> params{0.3, 1.1, 2.0, 3.3, 5.6};
        const auto line = bertrand_polyline(f, cfg, params, 1e-11);
        REQUIRE(line.size() == params.size());
        for (std::size_t i = 0; i < params.size(); ++i) {
            CHECK(max_abs_component(line[i] - bertrand_point(f, cfg, params[i], 1e-11))
                  < 1e-9);
        }
    }
}

TEST_CASE("bertrand derivatives") {
    const Curve f = preset("example_336").evaluator();
    const auto cf = minktest::example336_bertrand();
    const double a = cf.cfg.a;
    const double th = std::tanh(cf.cfg.xi);

    SUBCASE("frame expressions at v = 0") {
        const CurveSample s = bertrand_derivatives(f, cf.cfg, 0.0);
        // d1 = a (f + tanh(xi) s) with f(0) = (0,1,0), s(0) = (0,0,1)
        CHECK(std::fabs(s.d1.x1) < 1e-14);
        CHECK(s.d1.x2 == doctest::Approx(a).epsilon(1e-13));
        CHECK(s.d1.x3 == doctest::Approx(a * th).epsilon(1e-13));
        CHECK(euclid_norm(s.position) < 1e-12);
    }
    SUBCASE("d2 is parallel to the tangent") {
        for (double v : {0.5, 1.7, 3.1}) {
            const CurveSample s = bertrand_derivatives(f, cf.cfg, v);
            const SabbanFrame fr = sabban_frame(f, v);
            const double factor = a * (1.0 - th * fr.kappa_g);
            CHECK(euclid_dist(s.d2, factor * fr.t) < 1e-11);
        }
    }
    SUBCASE("speed is a^2/cosh^2(xi), space-like") {
        for (double v : {0.2, 2.8, 5.9}) {
            const CurveSample s = bertrand_derivatives(f, cf.cfg, v);
            const double want = a * a / (std::cosh(cf.cfg.xi) * std::cosh(cf.cfg.xi));
            CHECK(mink_dot(s.d1, s.d1) == doctest::Approx(want).epsilon(1e-12));
        }
    }
    SUBCASE("time-like speed for H2 generators") {
        const Curve g = preset("example_46").evaluator();
        const auto cf46 = minktest::example46_bertrand();
        const double want =
            -cf46.cfg.a * cf46.cfg.a / (std::cosh(cf46.cfg.xi) * std::cosh(cf46.cfg.xi));
        for (double v : {0.1, 0.8, 1.6}) {
            const CurveSample s = bertrand_derivatives(g, cf46.cfg, v);
            CHECK(mink_dot(s.d1, s.d1) == doctest::Approx(want).epsilon(1e-12));
        }
    }
    SUBCASE("central differences of the quadrature match d1") {
        const double h = 1e-4;
        for (double v : {0.7, 2.1, 4.4}) {
            const MinkVec3 plus = bertrand_point(f, cf.cfg, v + h, 1e-12);
            const MinkVec3 minus = bertrand_point(f, cf.cfg, v - h, 1e-12);
            const MinkVec3 fd = (plus - minus) / (2.0 * h);
            CHECK(max_abs_component(fd - bertrand_derivatives(f, cf.cfg, v).d1) < 1e-6);
        }
    }
}

TEST_CASE("predicted curvature and torsion") {
    const BertrandConfig cfg{1.5, 0.6, Space::S12, +1};
    const double ch = std::cosh(0.6), th = std::tanh(0.6);

    SUBCASE("geodesic generator") {
        const KappaTau kt = predicted_kappa_tau(0.0, cfg);
        CHECK(kt.kappa == doctest::Approx(ch * ch / 1.5).epsilon(1e-14));
        CHECK(kt.tau == doctest::Approx(-ch * ch * th / 1.5).epsilon(1e-14));
        CHECK(kt.tau / kt.kappa == doctest::Approx(-th).epsilon(1e-14));
    }
    SUBCASE("kappa_g = tanh(xi) kills the torsion") {
        const KappaTau kt = predicted_kappa_tau(th, cfg);
        CHECK(1.5 * kt.kappa == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::fabs(kt.tau) < 1e-15);
    }
    SUBCASE("kappa_g = 1/tanh(xi) kills the curvature") {
        const KappaTau kt = predicted_kappa_tau(1.0 / th, cfg);
        CHECK(std::fabs(kt.kappa) < 1e-14);
    }
}

TEST_CASE("construction against prediction on the presets") {
    SUBCASE("example_336") {
        const Curve f = preset("example_336").evaluator();
        const auto cf = minktest::example336_bertrand();
        const BertrandResiduals r = verify_bertrand(f, cf.cfg, 100);
        CHECK(r.max_abs_kappa < 1e-8);
        CHECK(r.max_abs_tau < 1e-8);
        CHECK(r.max_identity_residual < 1e-8);
    }
    SUBCASE("example_46") {
        const Curve g = preset("example_46").evaluator();
        const auto cf = minktest::example46_bertrand();
        const BertrandResiduals r = verify_bertrand(g, cf.cfg, 100);
        CHECK(r.max_abs_kappa < 1e-8);
        CHECK(r.max_abs_tau < 1e-8);
        CHECK(r.max_identity_residual < 1e-8);
    }
    SUBCASE("randomized S12 generator") {
        RandomCurveOptions opts;
        opts.max_abs_kg = 1.2;
        const Curve c = random_spherical_curve(Space::S12, RandomCurveKind::Generic,
                                               2100, opts);
        const BertrandResiduals r = verify_bertrand(c, {1.3, 0.4, Space::S12}, 100);
        CHECK(r.max_identity_residual < 1e-7);
    }
    SUBCASE("epsilon flips when the curvature factor is negative") {
        const std::array<double, 1> c{kSqrt2};
        const Curve f = preset("pseudo_circle_s12", c).evaluator();
        // tanh(1.2) kappa_g = 0.833 * sqrt(2) > 1 everywhere
        const BertrandResiduals r = verify_bertrand(f, {1.0, 1.2, Space::S12}, 50);
        CHECK(r.max_identity_residual < 1e-8);
        CHECK(r.max_rel_kappa < 1e-10);
    }
    SUBCASE("degenerate Bertrand point is reported") {
        const std::array<double, 1> c{kSqrt2};
        const Curve f = preset("pseudo_circle_s12", c).evaluator();
        const double xi = std::atanh(1.0 / kSqrt2); // tanh(xi) kappa_g == 1
        CHECK_THROWS_AS(verify_bertrand(f, {1.0, xi, Space::S12}, 50),
                        DegenerateBertrandPoint);
    }
}

TEST_CASE("darboux indicatrix equals the generator evolute") {
    SUBCASE("constant case on S12") {
        const std::array<double, 1> c{kSqrt2};
        const Curve f = preset("pseudo_circle_s12", c).evaluator();
        CHECK(darboux_equals_evolute(f, {1.0, 0.5, Space::S12}, 100) < 1e-8);
    }
    SUBCASE("constant case on H2") {
        const std::array<double, 1> c{kSqrt2};
        const Curve g = preset("pseudo_circle_h2", c).evaluator();
        CHECK(darboux_equals_evolute(g, {1.0, 0.5, Space::H2}, 100) < 1e-8);
    }
    SUBCASE("randomized generators with kappa_g^2 > 1") {
        RandomCurveOptions opts;
        opts.min_kg_sq = 1.15;
        for (int k = 0; k < 4; ++k) {
            const Space space = k % 2 == 0 ? Space::S12 : Space::H2;
            const Curve c = random_spherical_curve(space, RandomCurveKind::HighCurvature,
                                                   5200 + std::uint64_t(k), opts);
            CHECK(darboux_equals_evolute(c, {1.1, 0.3, space}, 100) < 1e-7);
        }
    }
}

TEST_CASE("pseudo-circle generators make helices and only those do") {
    SUBCASE("presets are pseudo-circles, their Bertrand curves helices") {
        const Curve f = preset("example_336").evaluator();
        const auto cf336 = minktest::example336_bertrand();
        const HelixCorrespondence hc = helix_correspondence(f, cf336.cfg, 100, 1e-9);
        CHECK(hc.is_pseudo_circle);
        CHECK(hc.is_helix);

        const Curve g = preset("example_46").evaluator();
        const auto cf46 = minktest::example46_bertrand();
        const HelixCorrespondence hg = helix_correspondence(g, cf46.cfg, 100, 1e-9);
        CHECK(hg.is_pseudo_circle);
        CHECK(hg.is_helix);
    }
    SUBCASE("a wandering kappa_g breaks both properties") {
        RandomCurveOptions opts;
        opts.min_kg_sq = 1.15;
        opts.min_kg_spread = 0.1;
        const Curve c =
            random_spherical_curve(Space::H2, RandomCurveKind::HighCurvature, 61, opts);
        const HelixCorrespondence hc = helix_correspondence(c, {1.0, 0.3, Space::H2},
                                                            100, 1e-3);
        CHECK_FALSE(hc.is_pseudo_circle);
        CHECK_FALSE(hc.is_helix);
    }
}

// tau^2 - kappa^2 = cosh^2(xi) (kappa_g^2 - 1)/a^2 for both constructions
TEST_CASE("darboux causal character tracks the evolute condition") {
    for (int k = 0; k < 4; ++k) {
        const Space space = k % 2 == 0 ? Space::S12 : Space::H2;
        const Curve c = random_spherical_curve(
            space, k < 2 ? RandomCurveKind::Generic : RandomCurveKind::HighCurvature,
            777 + std::uint64_t(k));
        const BertrandConfig cfg{1.4, 0.25, space};
        const double ch = std::cosh(cfg.xi);
        for (int i = 0; i < 25; ++i) {
            const double v = c.domain().at(i, 25);
            const SabbanFrame fr = sabban_frame(c, v);
            if (std::fabs(1.0 - std::tanh(cfg.xi) * fr.kappa_g) < 1e-3) continue;
            const CurveSample s = bertrand_frame_sample(fr, cfg);
            const FrenetApparatus app =
                space == Space::S12 ? frenet_spacelike(s) : frenet_timelike(s);
            const double lhs = app.tau * app.tau - app.kappa * app.kappa;
            const double rhs =
                ch * ch * (fr.kappa_g * fr.kappa_g - 1.0) / (cfg.a * cfg.a);
            CHECK(std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)) < 1e-9);
        }
    }
}
