#pragma once

// Order-3 truncated Taylor arithmetic. A Jet3 carries a value together with
// the first three derivatives with respect to one scalar parameter, so a
// curve evaluated in jets yields exact alpha', alpha'', alpha''' with no
// finite differencing.

#include <cmath>
#include <string>

#include "mink/errors.hpp"
#include "mink/vec.hpp"

namespace mink {

struct Jet3 {
    double c0 = 0.0; // value
    double c1 = 0.0; // d/dv
    double c2 = 0.0; // d^2/dv^2
    double c3 = 0.0; // d^3/dv^3
};

constexpr Jet3 jet_variable(double v0) { return {v0, 1.0, 0.0, 0.0}; }
constexpr Jet3 jet_constant(double c) { return {c, 0.0, 0.0, 0.0}; }

constexpr Jet3 operator+(const Jet3& a, const Jet3& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3};
}
constexpr Jet3 operator-(const Jet3& a, const Jet3& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2, a.c3 - b.c3};
}
constexpr Jet3 operator-(const Jet3& a) { return {-a.c0, -a.c1, -a.c2, -a.c3}; }

// Leibniz through order 3.
constexpr Jet3 operator*(const Jet3& a, const Jet3& b) {
    return {a.c0 * b.c0,
            a.c1 * b.c0 + a.c0 * b.c1,
            a.c2 * b.c0 + 2.0 * a.c1 * b.c1 + a.c0 * b.c2,
            a.c3 * b.c0 + 3.0 * a.c2 * b.c1 + 3.0 * a.c1 * b.c2 + a.c0 * b.c3};
}
constexpr Jet3 operator*(double s, const Jet3& a) {
    return {s * a.c0, s * a.c1, s * a.c2, s * a.c3};
}
constexpr Jet3 operator*(const Jet3& a, double s) { return s * a; }

// Solves q*b = a order by order.
constexpr Jet3 operator/(const Jet3& a, const Jet3& b) {
    if (b.c0 == 0.0) throw DivisionByZero("jet division by zero");
    Jet3 q;
    q.c0 = a.c0 / b.c0;
    q.c1 = (a.c1 - q.c0 * b.c1) / b.c0;
    q.c2 = (a.c2 - 2.0 * q.c1 * b.c1 - q.c0 * b.c2) / b.c0;
    q.c3 = (a.c3 - 3.0 * q.c2 * b.c1 - 3.0 * q.c1 * b.c2 - q.c0 * b.c3) / b.c0;
    return q;
}
constexpr Jet3 operator/(const Jet3& a, double s) { return a / jet_constant(s); }

// Faa di Bruno through order 3: compose outer derivatives (g, g', g'', g''')
// taken at a.c0 with the inner jet a.
constexpr Jet3 jet_compose(double g0, double g1, double g2, double g3, const Jet3& a) {
    return {g0,
            g1 * a.c1,
            g2 * a.c1 * a.c1 + g1 * a.c2,
            g3 * a.c1 * a.c1 * a.c1 + 3.0 * g2 * a.c1 * a.c2 + g1 * a.c3};
}

enum class Fn { Sin, Cos, Sinh, Cosh, Tan, Tanh, Exp, Ln, Sqrt };

inline const char* fn_name(Fn f) {
    switch (f) {
        case Fn::Sin: return "sin";
        case Fn::Cos: return "cos";
        case Fn::Sinh: return "sinh";
        case Fn::Cosh: return "cosh";
        case Fn::Tan: return "tan";
        case Fn::Tanh: return "tanh";
        case Fn::Exp: return "exp";
        case Fn::Ln: return "ln";
        case Fn::Sqrt: return "sqrt";
    }
    return "?";
}

inline Jet3 jet_apply(Fn fn, const Jet3& a) {
    const double x = a.c0;
    switch (fn) {
        case Fn::Sin: {
            const double s = std::sin(x), c = std::cos(x);
            return jet_compose(s, c, -s, -c, a);
        }
        case Fn::Cos: {
            const double s = std::sin(x), c = std::cos(x);
            return jet_compose(c, -s, -c, s, a);
        }
        case Fn::Sinh: {
            const double s = std::sinh(x), c = std::cosh(x);
            return jet_compose(s, c, s, c, a);
        }
        case Fn::Cosh: {
            const double s = std::sinh(x), c = std::cosh(x);
            return jet_compose(c, s, c, s, a);
        }
        case Fn::Tan: {
            if (std::cos(x) == 0.0) throw DomainError("tan at a pole");
            const double t = std::tan(x), u = 1.0 + t * t;
            return jet_compose(t, u, 2.0 * t * u, u * (2.0 + 6.0 * t * t), a);
        }
        case Fn::Tanh: {
            const double t = std::tanh(x), u = 1.0 - t * t;
            return jet_compose(t, u, -2.0 * t * u, u * (6.0 * t * t - 2.0), a);
        }
        case Fn::Exp: {
            const double e = std::exp(x);
            return jet_compose(e, e, e, e, a);
        }
        case Fn::Ln: {
            if (!(x > 0.0)) throw DomainError("ln of a non-positive value");
            const double i = 1.0 / x;
            return jet_compose(std::log(x), i, -i * i, 2.0 * i * i * i, a);
        }
        case Fn::Sqrt: {
            if (!(x > 0.0)) throw DomainError("sqrt of a non-positive value");
            const double r = std::sqrt(x);
            return jet_compose(r, 0.5 / r, -0.25 / (r * x), 0.375 / (r * x * x), a);
        }
    }
    throw DomainError("unknown function tag");
}

inline Jet3 sin(const Jet3& a) { return jet_apply(Fn::Sin, a); }
inline Jet3 cos(const Jet3& a) { return jet_apply(Fn::Cos, a); }
inline Jet3 sinh(const Jet3& a) { return jet_apply(Fn::Sinh, a); }
inline Jet3 cosh(const Jet3& a) { return jet_apply(Fn::Cosh, a); }
inline Jet3 tan(const Jet3& a) { return jet_apply(Fn::Tan, a); }
inline Jet3 tanh(const Jet3& a) { return jet_apply(Fn::Tanh, a); }
inline Jet3 exp(const Jet3& a) { return jet_apply(Fn::Exp, a); }
inline Jet3 ln(const Jet3& a) { return jet_apply(Fn::Ln, a); }
inline Jet3 sqrt(const Jet3& a) { return jet_apply(Fn::Sqrt, a); }

// Integer exponents: repeated multiplication (negative bases allowed).
// Anything else goes through exp(b*ln a) and needs a positive base.
inline Jet3 jet_pow(const Jet3& a, const Jet3& b) {
    const bool exponent_constant = b.c1 == 0.0 && b.c2 == 0.0 && b.c3 == 0.0;
    const double bi = std::nearbyint(b.c0);
    if (exponent_constant && b.c0 == bi && std::fabs(bi) <= 64.0) {
        long n = static_cast<long>(bi);
        if (n == 0) return jet_constant(1.0);
        Jet3 base = a;
        if (n < 0) {
            base = jet_constant(1.0) / a;
            n = -n;
        }
        Jet3 r = base;
        for (long i = 1; i < n; ++i) r = r * base;
        return r;
    }
    return exp(b * ln(a));
}

// A vector in R^3_1 whose components are jets; the workhorse for curve and
// surface differentiation.
struct JetVec3 {
    Jet3 x1, x2, x3;

    MinkVec3 order0() const { return {x1.c0, x2.c0, x3.c0}; }
    MinkVec3 order1() const { return {x1.c1, x2.c1, x3.c1}; }
    MinkVec3 order2() const { return {x1.c2, x2.c2, x3.c2}; }
    MinkVec3 order3() const { return {x1.c3, x2.c3, x3.c3}; }

    friend JetVec3 operator+(const JetVec3& a, const JetVec3& b) {
        return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
    }
    friend JetVec3 operator-(const JetVec3& a, const JetVec3& b) {
        return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
    }
    friend JetVec3 operator*(const Jet3& s, const JetVec3& a) {
        return {s * a.x1, s * a.x2, s * a.x3};
    }
    friend JetVec3 operator*(double s, const JetVec3& a) {
        return {s * a.x1, s * a.x2, s * a.x3};
    }
};

inline Jet3 mink_dot(const JetVec3& a, const JetVec3& b) {
    return a.x1 * b.x1 + a.x2 * b.x2 - a.x3 * b.x3;
}

inline JetVec3 mink_cross(const JetVec3& a, const JetVec3& b) {
    return {a.x2 * b.x3 - a.x3 * b.x2,
            a.x3 * b.x1 - a.x1 * b.x3,
            a.x2 * b.x1 - a.x1 * b.x2};
}

inline Jet3 det3(const JetVec3& x, const JetVec3& y, const JetVec3& z) {
    return x.x1 * (y.x2 * z.x3 - y.x3 * z.x2)
         - x.x2 * (y.x1 * z.x3 - y.x3 * z.x1)
         + x.x3 * (y.x1 * z.x2 - y.x2 * z.x1);
}

} // namespace mink
