#pragma once

// Bertrand curves built by quadrature from unit-speed spherical curves:
//
//   gamma(v) = a Int_0^v f dt + a tanh(xi) Int_0^v f x f' dt
//
// with predicted curvature/torsion, the Bertrand identity
// a (eps kappa + tanh(xi) tau) = 1, the Darboux-indicatrix / evolute
// agreement, and the pseudo-circle <-> helix correspondence.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "mink/curve.hpp"
#include "mink/errors.hpp"
#include "mink/frenet.hpp"
#include "mink/quadrature.hpp"
#include "mink/sabban.hpp"
#include "mink/vec.hpp"

namespace mink {

struct BertrandConfig {
    double a = 1.0;   // length scale, != 0
    double xi = 0.0;  // the hyperbolic-angle constant
    Space space = Space::S12;
    int epsilon = +1; // nominal sign used by predicted_kappa_tau

    void validate() const {
        if (a == 0.0) throw BadParameter("Bertrand scale a must be non-zero");
        if (space != Space::S12 && space != Space::H2)
            throw BadParameter("Bertrand construction needs an S12 or H2 generator");
    }
};

// Constants of the surface parametrization at fixed (u, theta):
// xi = tanh(theta) ln u and a = u cosh(theta) cosh(xi) on the space-like
// cone, xi = coth(theta) ln u and a = u sinh(theta) cosh(xi) on the
// time-like one.
inline BertrandConfig bertrand_config_from_surface(Space space, double u, double theta) {
    if (theta == 0.0) throw ThetaZero("theta must be non-zero");
    if (!(u > 0.0)) throw BadParameter("u must be positive");
    BertrandConfig cfg;
    cfg.space = space;
    if (space == Space::S12) {
        cfg.xi = std::tanh(theta) * std::log(u);
        cfg.a = u * std::cosh(theta) * std::cosh(cfg.xi);
    } else if (space == Space::H2) {
        cfg.xi = (std::cosh(theta) / std::sinh(theta)) * std::log(u);
        cfg.a = u * std::sinh(theta) * std::cosh(cfg.xi);
    } else {
        throw BadParameter("Bertrand construction needs an S12 or H2 generator");
    }
    return cfg;
}

inline void require_base_point(const Curve& curve) {
    if (curve.domain().lo > 0.0 || curve.domain().hi < 0.0)
        throw BadParameter("curve domain must contain the integration base point 0");
}

// Integrand a f + a tanh(xi) (f x f').
inline MinkVec3 bertrand_integrand(const Curve& curve, const BertrandConfig& cfg,
                                   double t) {
    const CurveSample c = curve.sample(t);
    return cfg.a * c.position
         + (cfg.a * std::tanh(cfg.xi)) * mink_cross(c.position, c.d1);
}

inline MinkVec3 bertrand_point(const Curve& curve, const BertrandConfig& cfg, double v,
                               double quad_tol = 1e-10) {
    cfg.validate();
    require_base_point(curve);
    return adaptive_simpson_vec(
        [&](double t) { return bertrand_integrand(curve, cfg, t); }, 0.0, v, quad_tol);
}

// Cumulative integration over an increasing parameter list; one pass instead
// of one quadrature per point.
inline std::vector<MinkVec3> bertrand_polyline(const Curve& curve,
                                               const BertrandConfig& cfg,
                                               std::span<const double> params,
                                               double quad_tol = 1e-10) {
    cfg.validate();
    require_base_point(curve);
    std::vector<MinkVec3> out;
    out.reserve(params.size());
    MinkVec3 acc{0, 0, 0};
    double prev = 0.0;
    const double seg_tol =
        quad_tol / std::max<std::size_t>(std::size_t(1), params.size());
    for (double v : params) {
        acc = acc
            + adaptive_simpson_vec(
                  [&](double t) { return bertrand_integrand(curve, cfg, t); }, prev, v,
                  seg_tol);
        prev = v;
        out.push_back(acc);
    }
    return out;
}

// First three derivatives from the closed frame expressions; no numerical
// differentiation of the quadrature happens here. The position is left at
// the origin — callers that need it integrate separately.
inline CurveSample bertrand_frame_sample(const SabbanFrame& fr, const BertrandConfig& cfg) {
    const double th = std::tanh(cfg.xi);
    const double a = cfg.a;
    const double kg = fr.kappa_g;
    CurveSample out;
    out.position = {0, 0, 0};
    out.d1 = a * (fr.base + th * fr.s);
    out.d2 = (a * (1.0 - th * kg)) * fr.t;
    const double base_sign = cfg.space == Space::S12 ? -1.0 : 1.0;
    out.d3 = (base_sign * a * (1.0 - th * kg)) * fr.base
           - (a * th * fr.kappa_g_prime) * fr.t
           + (base_sign * a * (kg - th * kg * kg)) * fr.s;
    return out;
}

inline CurveSample bertrand_derivatives(const Curve& curve, const BertrandConfig& cfg,
                                        double v, double quad_tol = 1e-10) {
    cfg.validate();
    const SabbanFrame fr = sabban_frame(curve, v);
    CurveSample out = bertrand_frame_sample(fr, cfg);
    out.position = bertrand_point(curve, cfg, v, quad_tol);
    return out;
}

// The constructed Bertrand curve as an evaluator over the generator's
// domain. Positions are integrated on demand; the derivative jets are closed
// form.
inline Curve bertrand_curve(const Curve& generator, const BertrandConfig& cfg,
                            double quad_tol = 1e-10) {
    cfg.validate();
    Curve g = generator;
    BertrandConfig c = cfg;
    return Curve(Space::Free, generator.domain(), [g, c, quad_tol](double v) {
        return bertrand_derivatives(g, c, v, quad_tol);
    });
}

struct KappaTau {
    double kappa = 0.0, tau = 0.0;
};

inline KappaTau predicted_kappa_tau(double kappa_g, const BertrandConfig& cfg) {
    cfg.validate();
    const double ch = std::cosh(cfg.xi);
    const double th = std::tanh(cfg.xi);
    return {double(cfg.epsilon) * ch * ch * (1.0 - th * kappa_g) / cfg.a,
            ch * ch * (kappa_g - th) / cfg.a};
}

// Residuals of the construction over a uniform grid.
//   max_abs_*  : |numerical - predicted| for kappa and tau
//   max_rel_*  : the same, relative to the predicted value
//   max_identity_residual : |a (eps kappa + tanh(xi) tau) - 1|
// eps is resolved per grid point as sign(a) sign(1 - tanh(xi) kappa_g) so the
// predicted kappa matches the norm-based (non-negative) one; a sign change of
// that factor inside the grid is reported as a degenerate Bertrand point
// rather than silently flipped.
struct BertrandResiduals {
    double max_abs_kappa = 0.0, max_rel_kappa = 0.0;
    double max_abs_tau = 0.0, max_rel_tau = 0.0;
    double max_identity_residual = 0.0;
};

inline constexpr double kBertrandDegenerate = 1e-6;

inline int pointwise_epsilon(const BertrandConfig& cfg, double kappa_g) {
    const double factor = 1.0 - std::tanh(cfg.xi) * kappa_g;
    return (cfg.a > 0.0 ? 1 : -1) * (factor >= 0.0 ? 1 : -1);
}

inline BertrandResiduals verify_bertrand(const Curve& curve, const BertrandConfig& cfg,
                                         int n_grid) {
    cfg.validate();
    if (n_grid < 2) throw BadParameter("n_grid must be >= 2");
    BertrandResiduals res;
    const double th = std::tanh(cfg.xi);
    for (int i = 0; i < n_grid; ++i) {
        const double v = curve.domain().at(i, n_grid);
        const SabbanFrame fr = sabban_frame(curve, v);
        if (std::fabs(1.0 - th * fr.kappa_g) <= kBertrandDegenerate)
            throw DegenerateBertrandPoint("1 - tanh(xi) kappa_g vanishes at v = "
                                          + format_double(v));
        const CurveSample sample = bertrand_frame_sample(fr, cfg);
        const FrenetApparatus app = cfg.space == Space::S12 ? frenet_spacelike(sample)
                                                            : frenet_timelike(sample);
        BertrandConfig local = cfg;
        local.epsilon = pointwise_epsilon(cfg, fr.kappa_g);
        // with this epsilon the predicted kappa is non-negative, matching the
        // norm-based one
        const KappaTau pred = predicted_kappa_tau(fr.kappa_g, local);
        res.max_abs_kappa = std::max(res.max_abs_kappa, std::fabs(app.kappa - pred.kappa));
        res.max_rel_kappa = std::max(
            res.max_rel_kappa, std::fabs(app.kappa - pred.kappa) / std::fabs(pred.kappa));
        res.max_abs_tau = std::max(res.max_abs_tau, std::fabs(app.tau - pred.tau));
        res.max_rel_tau =
            std::max(res.max_rel_tau, std::fabs(app.tau - pred.tau) / std::fabs(pred.tau));
        res.max_identity_residual = std::max(
            res.max_identity_residual,
            std::fabs(cfg.a * (double(local.epsilon) * app.kappa + th * app.tau) - 1.0));
    }
    return res;
}

// Max Euclidean distance between the Darboux indicatrix of the constructed
// Bertrand curve and the evolute of its generator. The indicatrix carries the
// orientation of the parameter, so the sign is aligned once at the first grid
// point and then held.
inline double darboux_equals_evolute(const Curve& curve, const BertrandConfig& cfg,
                                     int n_grid) {
    cfg.validate();
    if (n_grid < 2) throw BadParameter("n_grid must be >= 2");
    double sign = 1.0;
    double worst = 0.0;
    for (int i = 0; i < n_grid; ++i) {
        const double v = curve.domain().at(i, n_grid);
        const SabbanFrame fr = sabban_frame(curve, v);
        const MinkVec3 ev = evolute(fr);
        const CurveSample sample = bertrand_frame_sample(fr, cfg);
        const FrenetApparatus app = cfg.space == Space::S12 ? frenet_spacelike(sample)
                                                            : frenet_timelike(sample);
        const MinkVec3 ind = darboux_indicatrix(app).point;
        if (i == 0)
            sign = euclid_dist(ind, ev) <= euclid_dist(-1.0 * ind, ev) ? 1.0 : -1.0;
        worst = std::max(worst, euclid_dist(sign * ind, ev));
    }
    return worst;
}

struct HelixCorrespondence {
    bool is_pseudo_circle = false;
    bool is_helix = false;
};

// The generator is a pseudo-circle (kappa_g spread below tol) exactly when
// the constructed Bertrand curve is a helix (tau/kappa spread below tol).
inline HelixCorrespondence helix_correspondence(const Curve& curve,
                                                const BertrandConfig& cfg, int n_grid,
                                                double tol) {
    cfg.validate();
    const KappaGRange kg = kappa_g_range(curve, n_grid);
    Curve g = curve;
    BertrandConfig c = cfg;
    const Curve constructed(Space::Free, curve.domain(), [g, c](double v) {
        return bertrand_frame_sample(sabban_frame(g, v), c);
    });
    return {kg.spread() < tol, is_helix(constructed, n_grid, tol)};
}

} // namespace mink
