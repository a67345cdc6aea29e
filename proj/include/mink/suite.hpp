#pragma once

// The built-in verification suite: every identity and construction the
// library implements, run end to end over the example generators, the
// pseudo-circle presets, and seeded random curve ensembles, with pinned
// tolerances. The CLI `verify` subcommand and the acceptance runner both
// drive the checks from here.

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "mink/bertrand.hpp"
#include "mink/curve.hpp"
#include "mink/expr.hpp"
#include "mink/frenet.hpp"
#include "mink/io.hpp"
#include "mink/random_curve.hpp"
#include "mink/rng.hpp"
#include "mink/sabban.hpp"
#include "mink/surface.hpp"
#include "mink/vec.hpp"

namespace mink {

namespace suite_detail {

inline constexpr double kSqrt2 = 1.4142135623730951;

inline Curve preset_curve(const std::string& name) {
    if (name == "pseudo_circle_s12" || name == "pseudo_circle_h2") {
        const std::array<double, 1> c{kSqrt2};
        return preset(name, c).evaluator();
    }
    return preset(name).evaluator();
}

// A xi whose Bertrand construction stays away from both degeneracies
// (1 - tanh(xi) kappa_g = 0 and kappa_g - tanh(xi) = 0) over the observed
// kappa_g range.
inline std::optional<double> choose_xi(const KappaGRange& kg) {
    const std::array<double, 8> candidates{0.4, -0.4, 0.25, -0.25, 0.6,
                                           -0.6, 0.15, -0.15};
    for (double xi : candidates) {
        const double th = std::tanh(xi);
        const double f_lo = 1.0 - th * kg.min, f_hi = 1.0 - th * kg.max;
        const bool factor_safe =
            f_lo * f_hi > 0.0 && std::min(std::fabs(f_lo), std::fabs(f_hi)) > 0.05;
        const bool tau_safe = (th < kg.min - 0.03) || (th > kg.max + 0.03);
        if (factor_safe && tau_safe) return xi;
    }
    return std::nullopt;
}

struct RandomEnsemble {
    std::vector<Curve> curves;
    std::vector<BertrandConfig> configs;
};

// n random unit-speed curves on the given sphere with safe Bertrand
// constants attached; seeds advance until enough admissible draws exist.
inline RandomEnsemble random_ensemble(Space space, int n, std::uint64_t seed_base,
                                      RandomCurveKind kind, RandomCurveOptions opts = {}) {
    RandomEnsemble out;
    std::uint64_t seed = seed_base;
    while (int(out.curves.size()) < n) {
        const Curve c = random_spherical_curve(space, kind, seed++, opts);
        const std::optional<double> xi = choose_xi(kappa_g_range(c, 41));
        if (!xi) continue;
        BertrandConfig cfg;
        cfg.a = (out.curves.size() % 2 == 0) ? 1.3 : 0.9;
        cfg.xi = *xi;
        cfg.space = space;
        out.curves.push_back(c);
        out.configs.push_back(cfg);
    }
    return out;
}

inline double tau_kappa_spread(const Curve& constructed, int n_grid) {
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < n_grid; ++i) {
        const FrenetApparatus app =
            frenet_apparatus(constructed.sample(constructed.domain().at(i, n_grid)));
        const double ratio = app.tau / app.kappa;
        if (i == 0) lo = hi = ratio;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    return hi - lo;
}

inline Curve constructed_bertrand(const Curve& generator, const BertrandConfig& cfg) {
    Curve g = generator;
    BertrandConfig c = cfg;
    return Curve(Space::Free, generator.domain(), [g, c](double v) {
        return bertrand_frame_sample(sabban_frame(g, v), c);
    });
}

} // namespace suite_detail

// --- individual checks -----------------------------------------------------

// Quadrature (Bertrand construction) against the hand-integrated closed form
// of the example generator; returns the max componentwise error over n
// points and the elapsed wall time.
struct RoundTripResult {
    double max_error = 0.0;
    double seconds = 0.0;
};

inline RoundTripResult example_roundtrip(Space space, int n_points, double quad_tol) {
    using suite_detail::preset_curve;
    const auto t0 = std::chrono::steady_clock::now();
    const bool s12 = space == Space::S12;
    const Curve gen = preset_curve(s12 ? "example_336" : "example_46");
    const BertrandConfig cfg =
        bertrand_config_from_surface(space, std::numbers::e, 1.5);
    const double a = cfg.a;
    const double th = std::tanh(cfg.xi);
    const Interval range = s12 ? Interval{0.0, 2.0 * std::numbers::pi} : Interval{0.0, 2.0};
    std::vector<double> params(n_points);
    for (int i = 0; i < n_points; ++i) params[i] = range.at(i, n_points);
    const std::vector<MinkVec3> got = bertrand_polyline(gen, cfg, params, quad_tol);
    RoundTripResult res;
    for (int i = 0; i < n_points; ++i) {
        const double v = params[i];
        const MinkVec3 want =
            s12 ? MinkVec3{a * (1.0 - std::cos(v)), a * std::sin(v), a * th * v}
                : MinkVec3{a * (std::cosh(v) - 1.0), a * th * v, a * std::sinh(v)};
        res.max_error = std::max(res.max_error, max_abs_component(got[i] - want));
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// Max residual of the cross-product identities (i)-(v) over n random triples,
// scaled by the product of the Euclidean norms.
inline double cross_identity_residual(int n_triples, std::uint64_t seed) {
    SplitMix64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < n_triples; ++i) {
        const MinkVec3 x{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const MinkVec3 y{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const MinkVec3 z{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const double scale =
            std::max(1.0, euclid_norm(x) * euclid_norm(y) * euclid_norm(z));
        const MinkVec3 c = mink_cross(x, y);
        worst = std::max(worst, std::fabs(mink_dot(c, z) - det3(x, y, z)) / scale);
        worst = std::max(worst, euclid_norm(c + mink_cross(y, x)) / scale);
        worst = std::max(
            worst, euclid_norm(mink_cross(c, z) + mink_dot(x, z) * y - mink_dot(y, z) * x)
                       / scale);
        worst = std::max(worst, std::fabs(mink_dot(c, x)) / scale);
        worst = std::max(worst, std::fabs(mink_dot(c, y)) / scale);
        const double lagrange =
            mink_dot(c, c) + mink_dot(x, x) * mink_dot(y, y) - mink_dot(x, y) * mink_dot(x, y);
        worst = std::max(worst, std::fabs(lagrange) / (scale * scale));
    }
    return worst;
}

// Jet coefficients against stacked 5-point finite-difference stencils for the
// elementary functions and a fixed set of composed expressions.
inline double jet_fd_residual(int points_per_case, std::uint64_t seed) {
    struct FnCase {
        Fn fn;
        double lo, hi;
    };
    const std::array<FnCase, 9> fns{{{Fn::Sin, -2, 2},
                                     {Fn::Cos, -2, 2},
                                     {Fn::Sinh, -2, 2},
                                     {Fn::Cosh, -2, 2},
                                     {Fn::Tan, -1, 1},
                                     {Fn::Tanh, -2, 2},
                                     {Fn::Exp, -2, 2},
                                     {Fn::Ln, 0.5, 3},
                                     {Fn::Sqrt, 0.5, 3}}};
    const std::array<const char*, 10> exprs{
        "sin(v)*cos(2*v)", "sinh(v)+cosh(v/2)", "exp(-v^2)",       "ln(1+v^2)",
        "sqrt(1+sinh(v)^2)", "tan(v/2)",        "tanh(v)*exp(v/3)", "(v+1)/(v^2+2)",
        "v^2.5",             "cos(sinh(v/2))^3"};

    constexpr double h = 1e-5;
    auto fd = [&](const std::function<double(double)>& f, double x) {
        return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
    };
    auto rel = [](double got, double want) {
        return std::fabs(got - want) / std::max(1.0, std::fabs(want));
    };

    SplitMix64 rng(seed);
    double worst = 0.0;
    for (const FnCase& c : fns) {
        for (int i = 0; i < points_per_case; ++i) {
            const double x = rng.uniform(c.lo + 4 * h, c.hi - 4 * h);
            const Jet3 j = jet_apply(c.fn, jet_variable(x));
            auto value = [&](double t) { return jet_apply(c.fn, jet_variable(t)).c0; };
            auto c1 = [&](double t) { return jet_apply(c.fn, jet_variable(t)).c1; };
            auto c2 = [&](double t) { return jet_apply(c.fn, jet_variable(t)).c2; };
            worst = std::max(worst, rel(j.c1, fd(value, x)));
            worst = std::max(worst, rel(j.c2, fd(c1, x)));
            worst = std::max(worst, rel(j.c3, fd(c2, x)));
        }
    }
    for (const char* text : exprs) {
        const ExprPtr e = parse_expression(text);
        for (int i = 0; i < points_per_case; ++i) {
            const double x = rng.uniform(0.3 + 4 * h, 1.2 - 4 * h);
            const Jet3 j = eval_expr(e, jet_variable(x));
            auto value = [&](double t) { return eval_expr(e, jet_variable(t)).c0; };
            auto c1 = [&](double t) { return eval_expr(e, jet_variable(t)).c1; };
            auto c2 = [&](double t) { return eval_expr(e, jet_variable(t)).c2; };
            worst = std::max(worst, rel(j.c1, fd(value, x)));
            worst = std::max(worst, rel(j.c2, fd(c1, x)));
            worst = std::max(worst, rel(j.c3, fd(c2, x)));
        }
    }
    return worst;
}

struct ParserCheck {
    bool roundtrip_ok = false;
    bool errors_ok = false;
};

inline ParserCheck parser_check() {
    const std::array<const char*, 30> corpus{
        "v",          "pi",           "e",          "1.5",        "2.5e-3",
        "v+1",        "1-v-2",        "2*v",        "v/3",        "v*v*v",
        "(v+2)*v",    "v^2",          "-v^2",       "v^-2",       "(-v)^2",
        "v^2^3",      "2^v",          "sin(v)",     "cos(2*v)",   "sinh(v/2)",
        "tan(v/4)",   "tanh(3*v)",    "exp(-v^2/2)", "ln(1+v^2)", "sqrt(1+v^2)",
        "sin(cos(v))", "1/(1+exp(-v))", "-(v+1)/(v-2)", "0.25*sin(2*pi*v)+e^v",
        "cosh(v)^2-sinh(v)^2"};
    struct Bad {
        const char* text;
        std::size_t offset;
    };
    const std::array<Bad, 10> malformed{{{"u cosh", 0},
                                         {"sin v", 4},
                                         {"1 + ", 4},
                                         {"(v", 2},
                                         {"v + * 2", 4},
                                         {"2 * (3 + )", 9},
                                         {"cos()", 4},
                                         {"v v", 2},
                                         {"sqrt 2", 5},
                                         {"1..2", 2}}};
    ParserCheck out;
    out.roundtrip_ok = true;
    for (const char* text : corpus) {
        const ExprPtr first = parse_expression(text);
        if (!structurally_equal(first, parse_expression(serialize_expr(first))))
            out.roundtrip_ok = false;
    }
    out.errors_ok = true;
    for (const Bad& b : malformed) {
        try {
            parse_expression(b.text);
            out.errors_ok = false;
        } catch (const ParseError& err) {
            if (err.offset != b.offset) out.errors_ok = false;
        }
    }
    return out;
}

// --- the built-in suite (`verify --suite paper`) ----------------------------

inline VerificationReport paper_suite() {
    using namespace suite_detail;
    VerificationReport rep;
    const double quad_tol = 1e-10;

    // 1-2: quadrature against the closed-form Bertrand curves. The report
    // must be byte-identical across runs, so the runtime entries carry only
    // the verdict, never the measured seconds.
    {
        const RoundTripResult s = example_roundtrip(Space::S12, 200, quad_tol);
        rep.add("bertrand_roundtrip_s12", s.max_error, 1e-8, "preset example_336");
        rep.add_bool("bertrand_roundtrip_s12_under_1s", s.seconds < 1.0);
        const RoundTripResult t = example_roundtrip(Space::H2, 200, quad_tol);
        rep.add("bertrand_roundtrip_h2", t.max_error, 1e-8, "preset example_46");
        rep.add_bool("bertrand_roundtrip_h2_under_1s", t.seconds < 1.0);
    }

    // 3-4: Bertrand identity and kappa/tau prediction, presets plus 20 random
    // generators per space
    {
        double identity = 0.0, rel = 0.0;
        const Curve f = preset_curve("example_336");
        const Curve g = preset_curve("example_46");
        const BertrandConfig cf =
            bertrand_config_from_surface(Space::S12, std::numbers::e, 1.5);
        const BertrandConfig cg =
            bertrand_config_from_surface(Space::H2, std::numbers::e, 1.5);
        for (const auto& [curve, cfg] :
             {std::pair<const Curve&, BertrandConfig>{f, cf}, {g, cg}}) {
            const BertrandResiduals r = verify_bertrand(curve, cfg, 100);
            identity = std::max(identity, r.max_identity_residual);
            rel = std::max(rel, std::max(r.max_rel_kappa, r.max_rel_tau));
        }
        for (Space space : {Space::S12, Space::H2}) {
            const RandomEnsemble ens =
                random_ensemble(space, 20, space == Space::S12 ? 11000 : 12000,
                                RandomCurveKind::Generic);
            for (std::size_t i = 0; i < ens.curves.size(); ++i) {
                const BertrandResiduals r =
                    verify_bertrand(ens.curves[i], ens.configs[i], 100);
                identity = std::max(identity, r.max_identity_residual);
                rel = std::max(rel, std::max(r.max_rel_kappa, r.max_rel_tau));
            }
        }
        rep.add("bertrand_identity", identity, 1e-7,
                "presets + 20 random generators per space");
        rep.add("kappa_tau_prediction", rel, 1e-7, "relative, pointwise");
    }

    // 5: Darboux indicatrix of the constructed curve vs generator evolute
    {
        double worst = 0.0;
        worst = std::max(worst, darboux_equals_evolute(preset_curve("pseudo_circle_s12"),
                                                       {1.0, 0.5, Space::S12}, 100));
        worst = std::max(worst, darboux_equals_evolute(preset_curve("pseudo_circle_h2"),
                                                       {1.0, 0.5, Space::H2}, 100));
        RandomCurveOptions opts;
        opts.min_kg_sq = 1.15;
        for (Space space : {Space::S12, Space::H2}) {
            const RandomEnsemble ens =
                random_ensemble(space, 5, space == Space::S12 ? 21000 : 22000,
                                RandomCurveKind::HighCurvature, opts);
            for (std::size_t i = 0; i < ens.curves.size(); ++i)
                worst = std::max(
                    worst, darboux_equals_evolute(ens.curves[i], ens.configs[i], 100));
        }
        rep.add("darboux_indicatrix_equals_evolute", worst, 1e-7,
                "pseudo-circles + 10 random generators");
    }

    // 6: helix correspondence, both directions
    {
        double circle_spread = 0.0;
        const BertrandConfig cf =
            bertrand_config_from_surface(Space::S12, std::numbers::e, 1.5);
        const BertrandConfig cg =
            bertrand_config_from_surface(Space::H2, std::numbers::e, 1.5);
        circle_spread = std::max(
            circle_spread,
            tau_kappa_spread(constructed_bertrand(preset_curve("example_336"), cf), 100));
        circle_spread = std::max(
            circle_spread,
            tau_kappa_spread(constructed_bertrand(preset_curve("example_46"), cg), 100));
        rep.add("helix_from_pseudo_circle", circle_spread, 1e-9, "tau/kappa spread");

        RandomCurveOptions opts;
        opts.min_kg_sq = 1.15;
        opts.min_kg_spread = 0.12;
        double min_spread = 1e30;
        for (Space space : {Space::S12, Space::H2}) {
            const RandomEnsemble ens = random_ensemble(
                space, 1, space == Space::S12 ? 31000 : 32000,
                RandomCurveKind::HighCurvature, opts);
            min_spread = std::min(
                min_spread,
                tau_kappa_spread(constructed_bertrand(ens.curves[0], ens.configs[0]),
                                 100));
        }
        rep.add("non_helix_from_perturbed_generator", std::max(0.0, 1e-3 - min_spread),
                0.0, "shortfall below the 1e-3 spread floor");
    }

    // 7-8: tangents sweep the surface; integrated rulings are Bertrand curves
    {
        const double worst_tangent =
            std::max(derivative_on_surface_check(preset_curve("example_336"),
                                                 std::numbers::e, 1.5, 100),
                     derivative_on_surface_check(preset_curve("example_46"),
                                                 std::numbers::e, 1.5, 100));
        rep.add("bertrand_tangent_on_surface", worst_tangent, 1e-9, "u=e, theta=1.5");

        const double worst_ruling =
            std::max(integral_curve_bertrand_check(preset_curve("example_336"),
                                                   std::numbers::e, 1.5, 100),
                     integral_curve_bertrand_check(preset_curve("example_46"),
                                                   std::numbers::e, 1.5, 100));
        rep.add("integrated_ruling_is_bertrand", worst_ruling, 1e-7, "u=e, theta=1.5");
    }

    // 9: constant-angle property on 50x50 grids
    {
        double worst = 0.0;
        {
            SurfaceConfig cfg;
            cfg.theta = 1.5;
            cfg.cone = Cone::SpaceLike;
            cfg.u_range = {0.5, 3.0};
            cfg.v_range = {0.0, 2.0 * std::numbers::pi};
            cfg.nu = cfg.nv = 50;
            worst = std::max(worst,
                             constant_slope_residual(preset_curve("example_336"), cfg));
            cfg.cone = Cone::TimeLike;
            cfg.v_range = {0.0, 2.0};
            worst = std::max(worst,
                             constant_slope_residual(preset_curve("example_46"), cfg));
        }
        SplitMix64 rng(41000);
        // |kappa_g| < 1 keeps cosh(xi) - kappa_g sinh(xi) away from zero for
        // every u, so the sampled patch stays an immersion (x_v never
        // vanishes and the normal cannot flip inside the grid)
        RandomCurveOptions slope_opts;
        slope_opts.max_abs_kg = 0.95;
        for (Space space : {Space::S12, Space::H2}) {
            for (int k = 0; k < 10; ++k) {
                const Curve c = random_spherical_curve(
                    space, RandomCurveKind::Generic,
                    (space == Space::S12 ? 42000 : 43000) + std::uint64_t(k), slope_opts);
                SurfaceConfig cfg;
                cfg.theta = rng.uniform(0.5, 1.2);
                cfg.cone = space == Space::S12 ? Cone::SpaceLike : Cone::TimeLike;
                cfg.u_range = {0.6, 2.4};
                cfg.v_range = c.domain();
                cfg.nu = cfg.nv = 50;
                worst = std::max(worst, constant_slope_residual(c, cfg));
            }
        }
        rep.add("constant_slope_angle", worst, 1e-8,
                "paper surfaces + 10 random generators per cone");
    }

    // 10: frame structure
    {
        double sabban_worst = 0.0;
        for (const char* name :
             {"example_336", "example_46", "pseudo_circle_s12", "pseudo_circle_h2"}) {
            const Curve c = preset_curve(name);
            for (int i = 0; i < 100; ++i)
                sabban_worst = std::max(
                    sabban_worst, frame_ode_residual(c, c.domain().at(i, 100)));
        }
        for (Space space : {Space::S12, Space::H2}) {
            const Curve c = random_spherical_curve(
                space, RandomCurveKind::Generic, space == Space::S12 ? 51000 : 52000);
            for (int i = 0; i < 100; ++i)
                sabban_worst = std::max(
                    sabban_worst, frame_ode_residual(c, c.domain().at(i, 100)));
        }
        rep.add("sabban_frame_ode", sabban_worst, 1e-7, "100 points per curve");

        double frenet_worst = 0.0;
        {
            // space-like Bertrand curve, reparametrized to arc length
            const Curve gen = preset_curve("example_336");
            const BertrandConfig cfg{1.3, 0.35, Space::S12};
            const Curve unit =
                reparametrize_unit_speed(bertrand_curve(gen, cfg, quad_tol), quad_tol);
            for (int i = 0; i < 100; ++i)
                frenet_worst = std::max(
                    frenet_worst, frenet_ode_residual(unit, unit.domain().at(i, 100)));
        }
        {
            // unit-speed time-like helix (cos s, sin s, sqrt(2) s)
            const double b = std::sqrt(2.0);
            const Curve helix(Space::Free, {0.0, 6.0}, [b](double s) {
                CurveSample c;
                c.position = {std::cos(s), std::sin(s), b * s};
                c.d1 = {-std::sin(s), std::cos(s), b};
                c.d2 = {-std::cos(s), -std::sin(s), 0.0};
                c.d3 = {std::sin(s), -std::cos(s), 0.0};
                return c;
            });
            for (int i = 0; i < 100; ++i)
                frenet_worst = std::max(
                    frenet_worst, frenet_ode_residual(helix, helix.domain().at(i, 100)));
        }
        rep.add("frenet_frame_ode", frenet_worst, 1e-7, "100 points per curve");

        rep.add("cross_product_identities", cross_identity_residual(1000, 61000), 1e-12,
                "1000 random triples");
    }

    // 11: evolute geometry of the pseudo-circle presets + contact order
    {
        const Curve f = preset_curve("pseudo_circle_s12");
        double worst_s12 = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double v = f.domain().at(i, 50);
            const SabbanFrame fr = sabban_frame(f, v);
            worst_s12 = std::max(worst_s12,
                                 euclid_dist(evolute(fr), MinkVec3{-1.0, 0.0, 0.0}));
            worst_s12 = std::max(
                worst_s12,
                std::fabs(mink_dot(fr.base, curvature_center(fr).u_plus) - kSqrt2));
        }
        rep.add("evolute_pseudo_circle_s12", worst_s12, 1e-8,
                "constant (-1,0,0), <f,u+> = sqrt(2)");

        const Curve g = preset_curve("pseudo_circle_h2");
        double worst_h2 = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double v = g.domain().at(i, 50);
            const SabbanFrame fr = sabban_frame(g, v);
            worst_h2 =
                std::max(worst_h2, euclid_dist(evolute(fr), MinkVec3{0.0, 0.0, 1.0}));
            worst_h2 = std::max(
                worst_h2,
                std::fabs(mink_dot(fr.base, curvature_center(fr).u_plus) + kSqrt2));
        }
        rep.add("evolute_pseudo_circle_h2", worst_h2, 1e-8,
                "constant (0,0,1), <g,u0> = -sqrt(2)");

        RandomCurveOptions opts;
        opts.min_kg_sq = 1.15;
        double contact_worst = 0.0;
        for (Space space : {Space::S12, Space::H2}) {
            const RandomEnsemble ens =
                random_ensemble(space, 2, space == Space::S12 ? 71000 : 72000,
                                RandomCurveKind::HighCurvature, opts);
            for (const Curve& c : ens.curves) {
                for (int i = 1; i <= 10; ++i) {
                    const double v0 = c.domain().at(i, 12);
                    const SabbanFrame fr = sabban_frame(c, v0);
                    const MinkVec3 u0 = evolute(fr);
                    const double r =
                        -fr.kappa_g / std::sqrt(fr.kappa_g * fr.kappa_g - 1.0);
                    const HeightValues h = height_function(c, u0, v0);
                    contact_worst = std::max(
                        contact_worst,
                        std::max({std::fabs(h.h - r), std::fabs(h.h1), std::fabs(h.h2)}));
                }
            }
        }
        rep.add("pseudo_circle_contact_order", contact_worst, 1e-8,
                "10 parameters on random generators");
    }

    // 12-13: jets vs finite differences, parser round trip
    rep.add("jet_finite_differences", jet_fd_residual(100, 81000), 1e-6,
            "elementary functions + 10 expressions");
    {
        const ParserCheck pc = parser_check();
        rep.add_bool("parser_roundtrip", pc.roundtrip_ok, "30 expressions");
        rep.add_bool("parser_error_offsets", pc.errors_ok, "10 malformed inputs");
    }

    return rep;
}

// --- per-curve verification (CLI `verify` without --suite) ------------------

struct CurveVerifyOptions {
    int grid = 200;
    double tol = 1e-7;
    double quad_tol = 1e-10;
    std::optional<double> u;
    std::optional<double> theta;
};

inline VerificationReport verify_curve_report(const Curve& input,
                                              const CurveVerifyOptions& opts) {
    VerificationReport rep;
    if (input.space() == Space::Free)
        throw BadParameter("verification needs an S12 or H2 curve");

    rep.add("sphere_membership", validate_on_sphere(input, opts.grid), opts.tol);

    Curve curve = input;
    std::string note;
    if (validate_unit_speed(input, opts.grid) > 1e-9) {
        curve = reparametrize_unit_speed(input, opts.quad_tol);
        note = "after arc-length reparametrization";
    }
    rep.add("unit_speed", validate_unit_speed(curve, opts.grid), opts.tol, note);

    double ode = 0.0;
    for (int i = 0; i < opts.grid; ++i)
        ode = std::max(ode, frame_ode_residual(curve, curve.domain().at(i, opts.grid)));
    rep.add("sabban_frame_ode", ode, opts.tol);

    const KappaGRange kg = kappa_g_range(curve, opts.grid);
    const bool evolute_defined = std::min(kg.min * kg.min, kg.max * kg.max) > 1.0
                                 && kg.min * kg.max > 0.0;

    BertrandConfig cfg;
    bool have_cfg = false;
    if (opts.u && opts.theta) {
        cfg = bertrand_config_from_surface(curve.space(), *opts.u, *opts.theta);
        have_cfg = true;
    } else if (const std::optional<double> xi = suite_detail::choose_xi(kg)) {
        cfg.a = 1.3;
        cfg.xi = *xi;
        cfg.space = curve.space();
        have_cfg = true;
    }

    if (have_cfg) {
        const std::string params = "a=" + format_double(cfg.a)
                                 + " xi=" + format_double(cfg.xi);
        const BertrandResiduals r = verify_bertrand(curve, cfg, opts.grid);
        rep.add("bertrand_identity", r.max_identity_residual, opts.tol, params);
        rep.add("kappa_tau_prediction", std::max(r.max_rel_kappa, r.max_rel_tau),
                opts.tol, params);
        if (evolute_defined)
            rep.add("darboux_indicatrix_equals_evolute",
                    darboux_equals_evolute(curve, cfg, opts.grid), opts.tol, params);
    }
    if (evolute_defined) {
        double contact = 0.0;
        for (int i = 1; i < 10; ++i) {
            const double v0 = curve.domain().at(i, 11);
            const SabbanFrame fr = sabban_frame(curve, v0);
            const HeightValues h = height_function(curve, evolute(fr), v0);
            const double r = -fr.kappa_g / std::sqrt(fr.kappa_g * fr.kappa_g - 1.0);
            contact = std::max(contact,
                               std::max({std::fabs(h.h - r), std::fabs(h.h1),
                                         std::fabs(h.h2)}));
        }
        rep.add("pseudo_circle_contact_order", contact, opts.tol);
    }
    if (opts.u && opts.theta) {
        rep.add("bertrand_tangent_on_surface",
                derivative_on_surface_check(curve, *opts.u, *opts.theta, opts.grid),
                opts.tol);
        rep.add("integrated_ruling_is_bertrand",
                integral_curve_bertrand_check(curve, *opts.u, *opts.theta, opts.grid),
                opts.tol);
        SurfaceConfig scfg;
        scfg.theta = *opts.theta;
        scfg.cone = curve.space() == Space::S12 ? Cone::SpaceLike : Cone::TimeLike;
        scfg.u_range = {*opts.u / 2.0, *opts.u * 1.5};
        scfg.v_range = curve.domain();
        scfg.nu = scfg.nv = 50;
        rep.add("constant_slope_angle", constant_slope_residual(curve, scfg), opts.tol);
    }
    return rep;
}

} // namespace mink
