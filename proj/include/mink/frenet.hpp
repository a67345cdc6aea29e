#pragma once

// Frenet apparatus of non-light-like curves in a general parameter: frame,
// curvature, torsion, Darboux vector and its spherical indicatrix, helix and
// Bertrand-condition predicates. Light-like (Cartan) frames are out of scope,
// as is the space-like case with a time-like principal normal.

#include <algorithm>
#include <cmath>

#include "mink/curve.hpp"
#include "mink/errors.hpp"
#include "mink/vec.hpp"

namespace mink {

struct FrenetApparatus {
    MinkVec3 T, N, B;
    double kappa = 0.0; // >= 0 by the norm-based definition
    double tau = 0.0;
    CausalCharacter curve_character = CausalCharacter::SpaceLike;
    CausalCharacter darboux_character = CausalCharacter::SpaceLike;

    // Rotation vector of the frame: -tau T + kappa B for space-like curves,
    // tau T + kappa B for time-like ones.
    MinkVec3 darboux() const {
        const double tsign = curve_character == CausalCharacter::TimeLike ? 1.0 : -1.0;
        return tsign * tau * T + kappa * B;
    }
};

// Curvature degeneracy threshold, applied to |a' x a''| relative to |a'|^3.
inline constexpr double kFrenetDegenerate = 1e-9;

inline FrenetApparatus frenet_spacelike(const CurveSample& c) {
    if (causal_character(c.d1) != CausalCharacter::SpaceLike)
        throw WrongCausalType("frenet_spacelike needs a space-like tangent");
    const double s = mink_dot(c.d1, c.d1);
    const double speed = std::sqrt(s);
    const MinkVec3 cross = mink_cross(c.d1, c.d2);
    const double cross_q = mink_dot(cross, cross);
    // Gram-Schmidt part of a'' orthogonal to a'; <w,w> = -cross_q / s.
    const MinkVec3 w = c.d2 - (mink_dot(c.d2, c.d1) / s) * c.d1;
    if (std::sqrt(std::fabs(cross_q)) <= kFrenetDegenerate * speed * s) {
        if (euclid_norm(w) <= kFrenetDegenerate * (euclid_norm(c.d2) + s))
            throw DegenerateCurvature("curvature is numerically zero");
        // w is essentially light-like: T' has no usable causal type here.
        throw UnsupportedNormal("principal normal is light-like");
    }
    if (cross_q > 0.0)
        throw UnsupportedNormal("principal normal is time-like");

    FrenetApparatus app;
    app.curve_character = CausalCharacter::SpaceLike;
    app.T = c.d1 / speed;
    app.N = w / std::sqrt(mink_dot(w, w));
    app.B = mink_cross(app.N, app.T);
    app.kappa = std::sqrt(-cross_q) / (speed * s);
    app.tau = det3(c.d1, c.d2, c.d3) / (-cross_q);
    app.darboux_character = causal_character(app.darboux());
    return app;
}

inline FrenetApparatus frenet_timelike(const CurveSample& c) {
    if (causal_character(c.d1) != CausalCharacter::TimeLike)
        throw WrongCausalType("frenet_timelike needs a time-like tangent");
    const double s = -mink_dot(c.d1, c.d1); // > 0
    const double speed = std::sqrt(s);
    const MinkVec3 cross = mink_cross(c.d1, c.d2);
    const double cross_q = mink_dot(cross, cross); // = s <w,w> >= 0
    if (std::sqrt(std::fabs(cross_q)) <= kFrenetDegenerate * speed * s)
        throw DegenerateCurvature("curvature is numerically zero");

    const MinkVec3 w = c.d2 - (mink_dot(c.d2, c.d1) / mink_dot(c.d1, c.d1)) * c.d1;
    FrenetApparatus app;
    app.curve_character = CausalCharacter::TimeLike;
    app.T = c.d1 / speed;
    app.N = w / std::sqrt(mink_dot(w, w));
    app.B = mink_cross(app.T, app.N);
    app.kappa = std::sqrt(cross_q) / (speed * s);
    app.tau = det3(c.d1, c.d2, c.d3) / cross_q;
    app.darboux_character = causal_character(app.darboux());
    return app;
}

// Dispatch on the causal character of the tangent.
inline FrenetApparatus frenet_apparatus(const CurveSample& c) {
    switch (causal_character(c.d1)) {
        case CausalCharacter::SpaceLike: return frenet_spacelike(c);
        case CausalCharacter::TimeLike: return frenet_timelike(c);
        case CausalCharacter::LightLike: break;
    }
    throw WrongCausalType("light-like tangent has no Frenet frame");
}

struct DarbouxIndicatrix {
    MinkVec3 point;
    Space target = Space::S12;
};

// C = D / |D|, landing on S12 when D is space-like and on H2 when time-like.
inline DarbouxIndicatrix darboux_indicatrix(const FrenetApparatus& app) {
    const MinkVec3 D = app.darboux();
    const double q = mink_dot(D, D);
    if (std::fabs(q) <= 1e-9 * euclid_norm_sq(D))
        throw LightLikeDarboux("Darboux vector is light-like");
    DarbouxIndicatrix ind;
    ind.point = D / std::sqrt(std::fabs(q));
    ind.target = q > 0.0 ? Space::S12 : Space::H2;
    return ind;
}

// tau/kappa spread over a uniform grid below tol.
inline bool is_helix(const Curve& curve, int n_grid, double tol) {
    if (n_grid < 2) throw BadParameter("n_grid must be >= 2");
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < n_grid; ++i) {
        const FrenetApparatus app =
            frenet_apparatus(curve.sample(curve.domain().at(i, n_grid)));
        const double ratio = app.tau / app.kappa;
        if (i == 0) { lo = hi = ratio; }
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    return hi - lo < tol;
}

// Max over a uniform grid of |A kappa + B tau - 1|.
inline double bertrand_condition_residual(const Curve& curve, double A, double B,
                                          int n_grid) {
    if (A == 0.0 || B == 0.0)
        throw BadParameter("Bertrand constants must be non-zero");
    if (n_grid < 2) throw BadParameter("n_grid must be >= 2");
    double worst = 0.0;
    for (int i = 0; i < n_grid; ++i) {
        const FrenetApparatus app =
            frenet_apparatus(curve.sample(curve.domain().at(i, n_grid)));
        worst = std::max(worst, std::fabs(A * app.kappa + B * app.tau - 1.0));
    }
    return worst;
}

// Residual of the Frenet equations at one parameter of a unit-speed curve.
// The frame is differentiated with jets (no finite differences): T' comes
// straight from the sample, N' and B' from order-1 jet arithmetic.
inline double frenet_ode_residual(const Curve& curve, double v) {
    const CurveSample c = curve.sample(v);
    const double q1 = mink_dot(c.d1, c.d1);
    const bool timelike = q1 < 0.0;
    if (std::fabs(std::fabs(q1) - 1.0) > 1e-6)
        throw NotUnitSpeed("frenet_ode_residual needs a unit-speed curve");

    const double q0 = mink_dot(c.d2, c.d2);        // <T',T'>
    const double q0p = 2.0 * mink_dot(c.d2, c.d3); // d/dv of the above
    if (!timelike && q0 <= 0.0)
        throw UnsupportedNormal("principal normal is not space-like");
    if (std::sqrt(std::fabs(q0)) <= kFrenetDegenerate)
        throw DegenerateCurvature("curvature is numerically zero");

    const double kappa = std::sqrt(q0);
    const double kappa1 = q0p / (2.0 * kappa);
    const MinkVec3 N0 = c.d2 / kappa;
    const MinkVec3 N1 = c.d3 / kappa - (kappa1 / (kappa * kappa)) * c.d2;

    const MinkVec3 cross = mink_cross(c.d1, c.d2);
    const double tau = det3(c.d1, c.d2, c.d3) / std::fabs(mink_dot(cross, cross));

    MinkVec3 B0, B1, r2, r3;
    if (!timelike) {
        B0 = mink_cross(N0, c.d1);
        B1 = mink_cross(N1, c.d1) + mink_cross(N0, c.d2);
        r2 = N1 - (-kappa * c.d1 + tau * B0);
        r3 = B1 - tau * N0;
    } else {
        B0 = mink_cross(c.d1, N0);
        B1 = mink_cross(c.d2, N0) + mink_cross(c.d1, N1);
        r2 = N1 - (kappa * c.d1 + tau * B0);
        r3 = B1 + tau * N0;
    }
    const MinkVec3 r1 = c.d2 - kappa * N0;
    return std::max({max_abs_component(r1), max_abs_component(r2), max_abs_component(r3)});
}

} // namespace mink
