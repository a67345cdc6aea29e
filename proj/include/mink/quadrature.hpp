#pragma once

// Adaptive Simpson quadrature with an absolute tolerance and a hard interval
// budget; exhausting the budget raises QuadratureFailure.

#include <cmath>
#include <cstdint>

#include "mink/errors.hpp"
#include "mink/vec.hpp"

namespace mink {

inline constexpr std::uint64_t kQuadIntervalBudget = std::uint64_t(1) << 20;

namespace detail {

template <class F>
double simpson_scalar(F&& f, double a, double m, double b, double fa, double fm, double fb,
                      double whole, double tol, int depth, std::uint64_t& budget) {
    if (budget == 0) throw QuadratureFailure("quadrature interval budget exhausted");
    --budget;
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double err = left + right - whole;
    if (depth <= 0) throw QuadratureFailure("quadrature recursion depth exhausted");
    if (std::fabs(err) <= 15.0 * tol) return left + right + err / 15.0;
    return simpson_scalar(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1, budget)
         + simpson_scalar(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1, budget);
}

template <class F>
MinkVec3 simpson_vec(F&& f, double a, double m, double b, const MinkVec3& fa,
                     const MinkVec3& fm, const MinkVec3& fb, const MinkVec3& whole,
                     double tol, int depth, std::uint64_t& budget) {
    if (budget == 0) throw QuadratureFailure("quadrature interval budget exhausted");
    --budget;
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const MinkVec3 flm = f(lm), frm = f(rm);
    const MinkVec3 left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const MinkVec3 right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const MinkVec3 err = left + right - whole;
    if (depth <= 0) throw QuadratureFailure("quadrature recursion depth exhausted");
    if (max_abs_component(err) <= 15.0 * tol) return left + right + err / 15.0;
    return simpson_vec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1, budget)
         + simpson_vec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1, budget);
}

} // namespace detail

// Integral of a scalar function over [a, b] (b may be less than a) with
// absolute error <= tol.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol,
                        std::uint64_t budget = kQuadIntervalBudget) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return sign * detail::simpson_scalar(f, a, m, b, fa, fm, fb, whole, tol, 52, budget);
}

// Component-wise integral of a MinkVec3-valued function, absolute error
// <= tol per component.
template <class F>
MinkVec3 adaptive_simpson_vec(F&& f, double a, double b, double tol,
                              std::uint64_t budget = kQuadIntervalBudget) {
    if (a == b) return {0.0, 0.0, 0.0};
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }
    const double m = 0.5 * (a + b);
    const MinkVec3 fa = f(a), fm = f(m), fb = f(b);
    const MinkVec3 whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return sign * detail::simpson_vec(f, a, m, b, fa, fm, fb, whole, tol, 52, budget);
}

} // namespace mink
