#pragma once

// Linear algebra of Minkowski 3-space R^3_1 with the metric
// <x,y> = x1*y1 + x2*y2 - x3*y3 (x3 is the time-like axis).

#include <cmath>

namespace mink {

struct MinkVec3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    friend constexpr MinkVec3 operator+(const MinkVec3& a, const MinkVec3& b) {
        return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
    }
    friend constexpr MinkVec3 operator-(const MinkVec3& a, const MinkVec3& b) {
        return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
    }
    friend constexpr MinkVec3 operator-(const MinkVec3& a) {
        return {-a.x1, -a.x2, -a.x3};
    }
    friend constexpr MinkVec3 operator*(double s, const MinkVec3& a) {
        return {s * a.x1, s * a.x2, s * a.x3};
    }
    friend constexpr MinkVec3 operator*(const MinkVec3& a, double s) { return s * a; }
    friend constexpr MinkVec3 operator/(const MinkVec3& a, double s) {
        return {a.x1 / s, a.x2 / s, a.x3 / s};
    }
};

enum class CausalCharacter { SpaceLike, TimeLike, LightLike };

// Classification tolerance, relative to the squared Euclidean norm. Exact
// zero tests are meaningless in floating point.
inline constexpr double kCausalTol = 1e-12;

constexpr double mink_dot(const MinkVec3& x, const MinkVec3& y) {
    return x.x1 * y.x1 + x.x2 * y.x2 - x.x3 * y.x3;
}

// Lorentzian cross product: bilinear, antisymmetric, and satisfying
// <x ^ y, z> = det(x, y, z).
constexpr MinkVec3 mink_cross(const MinkVec3& x, const MinkVec3& y) {
    return {x.x2 * y.x3 - x.x3 * y.x2,
            x.x3 * y.x1 - x.x1 * y.x3,
            x.x2 * y.x1 - x.x1 * y.x2};
}

inline double pseudo_norm(const MinkVec3& x) {
    return std::sqrt(std::fabs(mink_dot(x, x)));
}

constexpr double euclid_norm_sq(const MinkVec3& x) {
    return x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3;
}

inline double euclid_norm(const MinkVec3& x) { return std::sqrt(euclid_norm_sq(x)); }

inline double euclid_dist(const MinkVec3& a, const MinkVec3& b) {
    return euclid_norm(a - b);
}

constexpr double max_abs_component(const MinkVec3& x) {
    double m = x.x1 < 0 ? -x.x1 : x.x1;
    double a2 = x.x2 < 0 ? -x.x2 : x.x2;
    double a3 = x.x3 < 0 ? -x.x3 : x.x3;
    if (a2 > m) m = a2;
    if (a3 > m) m = a3;
    return m;
}

// Ordinary 3x3 determinant of the rows (x, y, z).
constexpr double det3(const MinkVec3& x, const MinkVec3& y, const MinkVec3& z) {
    return x.x1 * (y.x2 * z.x3 - y.x3 * z.x2)
         - x.x2 * (y.x1 * z.x3 - y.x3 * z.x1)
         + x.x3 * (y.x1 * z.x2 - y.x2 * z.x1);
}

// The zero vector counts as space-like.
inline CausalCharacter causal_character(const MinkVec3& x) {
    const double q = mink_dot(x, x);
    const double scale = kCausalTol * euclid_norm_sq(x);
    if (q > scale) return CausalCharacter::SpaceLike;
    if (q < -scale) return CausalCharacter::TimeLike;
    if (euclid_norm_sq(x) == 0.0) return CausalCharacter::SpaceLike;
    return CausalCharacter::LightLike;
}

// De Sitter 2-space S^2_1 = {<x,x> = 1} and hyperbolic space H^2 = {<x,x> = -1}.
inline bool on_de_sitter(const MinkVec3& x, double tol) {
    return std::fabs(mink_dot(x, x) - 1.0) <= tol;
}

inline bool on_hyperbolic(const MinkVec3& x, double tol) {
    return std::fabs(mink_dot(x, x) + 1.0) <= tol;
}

inline bool all_finite(const MinkVec3& x) {
    return std::isfinite(x.x1) && std::isfinite(x.x2) && std::isfinite(x.x3);
}

} // namespace mink
