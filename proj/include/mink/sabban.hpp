#pragma once

// Lorentzian Sabban frames of unit-speed space-like curves on the de Sitter
// 2-space S12 and on hyperbolic space H2, their geodesic curvature, the
// spherical evolutes, and the height-function / pseudo-circle contact
// machinery. The height function is stated for S12; the H2 variant follows
// the same template and is provided as an extension for cross-checks.

#include <algorithm>
#include <cmath>

#include "mink/curve.hpp"
#include "mink/errors.hpp"
#include "mink/jet.hpp"
#include "mink/vec.hpp"

namespace mink {

struct SabbanFrame {
    MinkVec3 base; // the point f(v) or g(v)
    MinkVec3 t;    // unit tangent
    MinkVec3 s;    // base x t
    double kappa_g = 0.0;
    double kappa_g_prime = 0.0;
    Space space = Space::S12;
};

inline constexpr double kSphereTol = 1e-9;
inline constexpr double kEvoluteTol = 1e-9; // lower bound for kappa_g^2 - 1

inline SabbanFrame sabban_frame(const CurveSample& c, Space space) {
    if (space != Space::S12 && space != Space::H2)
        throw BadParameter("Sabban frame needs an S12 or H2 curve");
    const double target = space == Space::S12 ? 1.0 : -1.0;
    if (std::fabs(mink_dot(c.position, c.position) - target) > kSphereTol)
        throw NotOnSphere("curve point is not on the requested sphere");
    if (std::fabs(mink_dot(c.d1, c.d1) - 1.0) > kSphereTol)
        throw NotUnitSpeed("curve is not unit speed at the requested point");

    SabbanFrame fr;
    fr.space = space;
    fr.base = c.position;
    fr.t = c.d1;
    fr.s = mink_cross(c.position, c.d1);
    // kappa_g = det(base, t, t'); differentiating once more kills the terms
    // with repeated rows, leaving det(base, t, t'').
    fr.kappa_g = det3(c.position, c.d1, c.d2);
    fr.kappa_g_prime = det3(c.position, c.d1, c.d3);
    return fr;
}

inline SabbanFrame sabban_frame(const Curve& curve, double v) {
    return sabban_frame(curve.sample(v), curve.space());
}

// Max component residual of the three spherical Frenet-Serret rows,
// with t' and s' taken from jets.
inline double frame_ode_residual(const Curve& curve, double v) {
    const CurveSample c = curve.sample(v);
    const SabbanFrame fr = sabban_frame(c, curve.space());
    const MinkVec3 r1 = c.d1 - fr.t; // zero by construction, kept for shape
    const MinkVec3 s_prime = mink_cross(c.position, c.d2); // (base x t)' with base' = t
    MinkVec3 r2;
    if (fr.space == Space::S12)
        r2 = c.d2 + fr.base + fr.kappa_g * fr.s;
    else
        r2 = c.d2 - fr.base - fr.kappa_g * fr.s;
    const MinkVec3 r3 = s_prime + fr.kappa_g * fr.t;
    return std::max({max_abs_component(r1), max_abs_component(r2), max_abs_component(r3)});
}

// De Sitter evolute (-kg f - s)/sqrt(kg^2-1) on S12, hyperbolic evolute
// (kg g + s)/sqrt(kg^2-1) on H2. Defined for kappa_g^2 > 1.
inline MinkVec3 evolute(const SabbanFrame& fr) {
    const double disc = fr.kappa_g * fr.kappa_g - 1.0;
    if (disc <= kEvoluteTol)
        throw EvoluteUndefined("evolute needs kappa_g^2 - 1 > 1e-9");
    const double den = std::sqrt(disc);
    if (fr.space == Space::S12)
        return (-fr.kappa_g * fr.base - fr.s) / den;
    return (fr.kappa_g * fr.base + fr.s) / den;
}

inline MinkVec3 evolute(const Curve& curve, double v) {
    return evolute(sabban_frame(curve, v));
}

// Evolute together with its v-derivative, both obtained by order-1 jet
// arithmetic on the frame fields.
struct EvoluteJet {
    MinkVec3 value;
    MinkVec3 derivative;
};

inline EvoluteJet evolute_jet(const Curve& curve, double v) {
    const CurveSample c = curve.sample(v);
    const SabbanFrame fr = sabban_frame(c, curve.space());
    const double disc = fr.kappa_g * fr.kappa_g - 1.0;
    if (disc <= kEvoluteTol)
        throw EvoluteUndefined("evolute needs kappa_g^2 - 1 > 1e-9");
    // order-1 jets of base, t, t'
    const JetVec3 base{{c.position.x1, c.d1.x1, 0, 0},
                       {c.position.x2, c.d1.x2, 0, 0},
                       {c.position.x3, c.d1.x3, 0, 0}};
    const JetVec3 tj{{c.d1.x1, c.d2.x1, 0, 0},
                     {c.d1.x2, c.d2.x2, 0, 0},
                     {c.d1.x3, c.d2.x3, 0, 0}};
    const JetVec3 tpj{{c.d2.x1, c.d3.x1, 0, 0},
                      {c.d2.x2, c.d3.x2, 0, 0},
                      {c.d2.x3, c.d3.x3, 0, 0}};
    const Jet3 kg = det3(base, tj, tpj); // (kappa_g, kappa_g')
    const JetVec3 sj = mink_cross(base, tj);
    const Jet3 den = sqrt(kg * kg - jet_constant(1.0));
    JetVec3 ev;
    if (fr.space == Space::S12) {
        const JetVec3 num{-(kg * base.x1) - sj.x1, -(kg * base.x2) - sj.x2,
                          -(kg * base.x3) - sj.x3};
        ev = {num.x1 / den, num.x2 / den, num.x3 / den};
    } else {
        const JetVec3 num{kg * base.x1 + sj.x1, kg * base.x2 + sj.x2, kg * base.x3 + sj.x3};
        ev = {num.x1 / den, num.x2 / den, num.x3 / den};
    }
    return {ev.order0(), ev.order1()};
}

// Height function h(v) = <base(v), u> and its first two v-derivatives.
struct HeightValues {
    double h = 0.0, h1 = 0.0, h2 = 0.0;
};

inline HeightValues height_function(const Curve& curve, const MinkVec3& u, double v) {
    const CurveSample c = curve.sample(v);
    return {mink_dot(c.position, u), mink_dot(c.d1, u), mink_dot(c.d2, u)};
}

enum class CriticalType { NotCritical, Critical, DegenerateCritical };

// u must lie on the same sphere as the curve (within tol). A critical point
// of the height function means u is pseudo-orthogonal to the tangent; a
// degenerate one pins u to +-(kg base + s)/sqrt(kg^2-1).
inline CriticalType critical_point_classification(const Curve& curve, const MinkVec3& u,
                                                  double v, double tol) {
    const double target = curve.space() == Space::S12 ? 1.0 : -1.0;
    if (curve.space() == Space::Free)
        throw BadParameter("height classification needs a spherical curve");
    if (std::fabs(mink_dot(u, u) - target) > tol)
        throw BadParameter("direction u is not on the sphere");
    const HeightValues h = height_function(curve, u, v);
    if (std::fabs(h.h1) >= tol) return CriticalType::NotCritical;
    if (std::fabs(h.h2) >= tol) return CriticalType::Critical;
    return CriticalType::DegenerateCritical;
}

// Centers of geodesic curvature u_± = ±(kg base + s)/sqrt(kg^2-1) and the
// pseudo-circle radius r0 = <base, u_plus>.
struct CurvatureCenter {
    MinkVec3 u_plus, u_minus;
    double r0 = 0.0;
};

inline CurvatureCenter curvature_center(const SabbanFrame& fr) {
    const double disc = fr.kappa_g * fr.kappa_g - 1.0;
    if (disc <= kEvoluteTol)
        throw EvoluteUndefined("curvature center needs kappa_g^2 - 1 > 1e-9");
    const double den = std::sqrt(disc);
    CurvatureCenter cc;
    cc.u_plus = (fr.kappa_g * fr.base + fr.s) / den;
    cc.u_minus = -1.0 * cc.u_plus;
    cc.r0 = (fr.space == Space::S12 ? 1.0 : -1.0) * fr.kappa_g / den;
    return cc;
}

inline CurvatureCenter curvature_center(const Curve& curve, double v) {
    return curvature_center(sabban_frame(curve, v));
}

// 3-point contact of the curve with the pseudo-circle of geodesic curvature
// centered at the evolute: psi(v) = <base(v), u0> - r with
// r = -kappa_g/sqrt(kappa_g^2-1) = <base(v0), u0> must vanish to second
// order at v0.
inline bool contact_order_check(const Curve& curve, double v0, double tol) {
    const SabbanFrame fr = sabban_frame(curve, v0);
    const MinkVec3 u0 = evolute(fr);
    const double r = -fr.kappa_g / std::sqrt(fr.kappa_g * fr.kappa_g - 1.0);
    const HeightValues h = height_function(curve, u0, v0);
    return std::fabs(h.h - r) < tol && std::fabs(h.h1) < tol && std::fabs(h.h2) < tol;
}

// Min/max of kappa_g over a uniform grid; handy for pseudo-circle tests.
struct KappaGRange {
    double min = 0.0, max = 0.0;
    double spread() const { return max - min; }
};

inline KappaGRange kappa_g_range(const Curve& curve, int n_grid) {
    if (n_grid < 2) throw BadParameter("n_grid must be >= 2");
    KappaGRange r;
    for (int i = 0; i < n_grid; ++i) {
        const double kg = sabban_frame(curve, curve.domain().at(i, n_grid)).kappa_g;
        if (i == 0) r.min = r.max = kg;
        r.min = std::min(r.min, kg);
        r.max = std::max(r.max, kg);
    }
    return r;
}

} // namespace mink
