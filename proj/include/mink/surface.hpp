#pragma once

// Space-like constant slope surfaces generated from unit-speed spherical
// curves:
//
//   space-like cone: x(u,v) = u cosh(th) (cosh(xi1) f + sinh(xi1) f x f'),
//                    xi1 = tanh(th) ln u,  f on S12
//   time-like cone:  x(u,v) = u sinh(th) (cosh(xi2) g + sinh(xi2) g x g'),
//                    xi2 = coth(th) ln u,  g on H2
//
// plus meshing, the constant-angle residual, and the two checks tying the
// surfaces back to Bertrand curves.

#include <algorithm>
#include <cmath>
#include <vector>

#include "mink/bertrand.hpp"
#include "mink/curve.hpp"
#include "mink/errors.hpp"
#include "mink/jet.hpp"
#include "mink/quadrature.hpp"
#include "mink/sabban.hpp"
#include "mink/vec.hpp"

namespace mink {

enum class Cone { SpaceLike, TimeLike };

inline Space cone_space(Cone c) { return c == Cone::SpaceLike ? Space::S12 : Space::H2; }

struct SurfaceConfig {
    double theta = 1.0;
    Cone cone = Cone::SpaceLike;
    Interval u_range{1.0, 2.0}; // u_min must stay positive (ln u)
    Interval v_range{0.0, 1.0};
    int nu = 2;
    int nv = 2;

    void validate() const {
        if (theta == 0.0) throw ThetaZero("theta must be non-zero");
        if (!(u_range.lo > 0.0)) throw BadParameter("u range must be positive");
        if (!(u_range.lo < u_range.hi) || !(v_range.lo < v_range.hi))
            throw BadParameter("degenerate parameter range");
        if (nu < 2 || nv < 2) throw BadParameter("mesh needs nu, nv >= 2");
    }
};

// Row-major nu x nv grid; row r is the fixed-u curve u = u_range.at(r, nu).
struct SurfaceMesh {
    int nu = 0, nv = 0;
    std::vector<MinkVec3> vertices;
    std::vector<MinkVec3> normals; // unit, time-like for a space-like surface

    const MinkVec3& vertex(int r, int c) const { return vertices[r * nv + c]; }
    const MinkVec3& normal(int r, int c) const { return normals[r * nv + c]; }
};

namespace detail {

inline void require_cone_match(const Curve& curve, Cone cone) {
    if (curve.space() != cone_space(cone))
        throw BadCone("curve space does not match the requested cone");
}

inline void require_surface_sample(const CurveSample& c, Cone cone) {
    const double target = cone == Cone::SpaceLike ? 1.0 : -1.0;
    if (std::fabs(mink_dot(c.position, c.position) - target) > kSphereTol)
        throw NotOnSphere("generator point is not on the required sphere");
    if (std::fabs(mink_dot(c.d1, c.d1) - 1.0) > kSphereTol)
        throw NotUnitSpeed("generator is not unit speed at the sampled point");
}

struct SurfaceFactors {
    Jet3 factor; // u cosh(theta) or u sinh(theta), as a jet in u
    Jet3 xi;     // tanh(theta) ln u or coth(theta) ln u, as a jet in u
};

// both scale factors as jets in u, so u-partials fall out of the same
// arithmetic that produces the points (no finite differences anywhere)
inline SurfaceFactors surface_factors(double u, double theta, Cone cone) {
    if (theta == 0.0) throw ThetaZero("theta must be non-zero");
    if (!(u > 0.0)) throw BadParameter("u must be positive");
    const Jet3 ju = jet_variable(u);
    if (cone == Cone::SpaceLike)
        return {std::cosh(theta) * ju, std::tanh(theta) * ln(ju)};
    return {std::sinh(theta) * ju, (std::cosh(theta) / std::sinh(theta)) * ln(ju)};
}

} // namespace detail

inline MinkVec3 surface_point(const CurveSample& sample, double u, double theta,
                              Cone cone) {
    detail::require_surface_sample(sample, cone);
    const auto f = detail::surface_factors(u, theta, cone);
    const MinkVec3 w = mink_cross(sample.position, sample.d1);
    return f.factor.c0
         * (std::cosh(f.xi.c0) * sample.position + std::sinh(f.xi.c0) * w);
}

inline MinkVec3 surface_point(const Curve& curve, const SurfaceConfig& cfg, double u,
                              double v) {
    cfg.validate();
    detail::require_cone_match(curve, cfg.cone);
    return surface_point(curve.sample(v), u, cfg.theta, cfg.cone);
}

// Point plus both first partials; the u-partial comes from a jet in u, the
// v-partial from the curve jets.
struct SurfaceJets {
    MinkVec3 x, x_u, x_v;
};

inline SurfaceJets surface_jets(const CurveSample& sample, double u, double theta,
                                Cone cone) {
    detail::require_surface_sample(sample, cone);
    const auto f = detail::surface_factors(u, theta, cone);
    const MinkVec3 p = sample.position;
    const MinkVec3 w = mink_cross(p, sample.d1);
    const MinkVec3 wv = mink_cross(p, sample.d2); // (f x f')' = f x f''
    const Jet3 ch = cosh(f.xi), sh = sinh(f.xi);

    // per component: x_i(u) = factor(u) (cosh(xi(u)) p_i + sinh(xi(u)) w_i)
    auto component = [&](double pi, double wi) {
        return f.factor * (pi * ch + wi * sh);
    };
    const Jet3 x1 = component(p.x1, w.x1);
    const Jet3 x2 = component(p.x2, w.x2);
    const Jet3 x3 = component(p.x3, w.x3);

    SurfaceJets out;
    out.x = {x1.c0, x2.c0, x3.c0};
    out.x_u = {x1.c1, x2.c1, x3.c1};
    out.x_v = f.factor.c0 * (ch.c0 * sample.d1 + sh.c0 * wv);
    return out;
}

inline MinkVec3 surface_normal(const SurfaceJets& jets) {
    const MinkVec3 n = mink_cross(jets.x_u, jets.x_v);
    const double pn = pseudo_norm(n);
    if (pn < 1e-12) throw DegenerateNormal("surface normal is numerically degenerate");
    return n / pn;
}

inline SurfaceMesh generate_mesh(const Curve& curve, const SurfaceConfig& cfg) {
    cfg.validate();
    detail::require_cone_match(curve, cfg.cone);
    SurfaceMesh mesh;
    mesh.nu = cfg.nu;
    mesh.nv = cfg.nv;
    mesh.vertices.resize(std::size_t(cfg.nu) * cfg.nv);
    mesh.normals.resize(std::size_t(cfg.nu) * cfg.nv);
    // v outer so each curve sample is taken once per column
    for (int c = 0; c < cfg.nv; ++c) {
        const CurveSample sample = curve.sample(cfg.v_range.at(c, cfg.nv));
        for (int r = 0; r < cfg.nu; ++r) {
            const double u = cfg.u_range.at(r, cfg.nu);
            const SurfaceJets jets = surface_jets(sample, u, cfg.theta, cfg.cone);
            mesh.vertices[std::size_t(r) * cfg.nv + c] = jets.x;
            mesh.normals[std::size_t(r) * cfg.nv + c] = surface_normal(jets);
        }
    }
    return mesh;
}

// The defining property: <x, n>/(|x| |n|) is the same number at every point.
// Returns the max deviation from the grid mean (the constant itself is not
// asserted against any formula, only measured).
struct SlopeResidual {
    double residual = 0.0;
    double mean = 0.0; // the measured angle constant
};

inline SlopeResidual constant_slope_stats(const Curve& curve, const SurfaceConfig& cfg) {
    cfg.validate();
    detail::require_cone_match(curve, cfg.cone);
    std::vector<double> q;
    q.reserve(std::size_t(cfg.nu) * cfg.nv);
    for (int c = 0; c < cfg.nv; ++c) {
        const CurveSample sample = curve.sample(cfg.v_range.at(c, cfg.nv));
        for (int r = 0; r < cfg.nu; ++r) {
            const double u = cfg.u_range.at(r, cfg.nu);
            const SurfaceJets jets = surface_jets(sample, u, cfg.theta, cfg.cone);
            const MinkVec3 n = surface_normal(jets);
            q.push_back(mink_dot(jets.x, n) / (pseudo_norm(jets.x) * pseudo_norm(n)));
        }
    }
    double mean = 0.0;
    for (double x : q) mean += x;
    mean /= double(q.size());
    double worst = 0.0;
    for (double x : q) worst = std::max(worst, std::fabs(x - mean));
    return {worst, mean};
}

inline double constant_slope_residual(const Curve& curve, const SurfaceConfig& cfg) {
    return constant_slope_stats(curve, cfg).residual;
}

// gamma'(v) of the Bertrand curve with constants taken from (u, theta) is the
// fixed-u parameter curve of the surface; returns the max componentwise gap.
inline double derivative_on_surface_check(const Curve& curve, double u, double theta,
                                          int n_grid) {
    if (n_grid < 2) throw BadParameter("n_grid must be >= 2");
    const Cone cone = curve.space() == Space::S12 ? Cone::SpaceLike : Cone::TimeLike;
    detail::require_cone_match(curve, cone);
    const BertrandConfig cfg = bertrand_config_from_surface(curve.space(), u, theta);
    const double th = std::tanh(cfg.xi);
    double worst = 0.0;
    for (int i = 0; i < n_grid; ++i) {
        const double v = curve.domain().at(i, n_grid);
        const CurveSample sample = curve.sample(v);
        const SabbanFrame fr = sabban_frame(sample, curve.space());
        const MinkVec3 gamma_prime = cfg.a * (fr.base + th * fr.s);
        const MinkVec3 x = surface_point(sample, u, theta, cone);
        worst = std::max(worst, max_abs_component(gamma_prime - x));
    }
    return worst;
}

// Integrating the fixed-u parameter curve x(v) gives a Bertrand curve: build
// an evaluator whose derivative jets come from the surface formula (an
// independent route from bertrand_frame_sample) and return the worst
// Bertrand-identity residual over the grid.
inline double integral_curve_bertrand_check(const Curve& curve, double u, double theta,
                                            int n_grid) {
    if (n_grid < 2) throw BadParameter("n_grid must be >= 2");
    const Cone cone = curve.space() == Space::S12 ? Cone::SpaceLike : Cone::TimeLike;
    detail::require_cone_match(curve, cone);
    const BertrandConfig cfg = bertrand_config_from_surface(curve.space(), u, theta);
    const double th = std::tanh(cfg.xi);

    double worst = 0.0;
    for (int i = 0; i < n_grid; ++i) {
        const double v = curve.domain().at(i, n_grid);
        const CurveSample c = curve.sample(v);
        detail::require_surface_sample(c, cone);
        const auto f = detail::surface_factors(u, theta, cone);
        const double factor = f.factor.c0;
        const double ch = std::cosh(f.xi.c0), sh = std::sinh(f.xi.c0);
        const MinkVec3 p = c.position;
        // d1 = x(v), d2 = x'(v), d3 = x''(v)
        CurveSample integrated;
        integrated.position = {0, 0, 0};
        integrated.d1 = factor * (ch * p + sh * mink_cross(p, c.d1));
        integrated.d2 = factor * (ch * c.d1 + sh * mink_cross(p, c.d2));
        integrated.d3 = factor
                      * (ch * c.d2
                         + sh * (mink_cross(c.d1, c.d2) + mink_cross(p, c.d3)));
        const FrenetApparatus app = cone == Cone::SpaceLike
                                        ? frenet_spacelike(integrated)
                                        : frenet_timelike(integrated);
        const double kg = sabban_frame(c, curve.space()).kappa_g;
        const int eps = pointwise_epsilon(cfg, kg);
        worst = std::max(worst,
                         std::fabs(cfg.a * (double(eps) * app.kappa + th * app.tau) - 1.0));
    }
    return worst;
}

} // namespace mink
