#pragma once

// Parametric curves in R^3_1: the curve-spec text format, jet evaluation,
// the built-in presets, sphere/unit-speed validation, and arc-length
// reparametrization.

#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <memory>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mink/errors.hpp"
#include "mink/expr.hpp"
#include "mink/jet.hpp"
#include "mink/quadrature.hpp"
#include "mink/vec.hpp"

namespace mink {

enum class Space { S12, H2, Free };

inline const char* space_name(Space s) {
    switch (s) {
        case Space::S12: return "S12";
        case Space::H2: return "H2";
        case Space::Free: return "Free";
    }
    return "?";
}

struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    double span() const { return hi - lo; }
    double at(int i, int n) const { return lo + span() * double(i) / double(n - 1); }
};

// Position and the first three parameter derivatives at one point.
struct CurveSample {
    MinkVec3 position, d1, d2, d3;
};

inline CurveSample to_sample(const JetVec3& j) {
    return {j.order0(), j.order1(), j.order2(), j.order3()};
}

inline JetVec3 to_jets(const CurveSample& s) {
    return {{s.position.x1, s.d1.x1, s.d2.x1, s.d3.x1},
            {s.position.x2, s.d1.x2, s.d2.x2, s.d3.x2},
            {s.position.x3, s.d1.x3, s.d2.x3, s.d3.x3}};
}

// Type-erased curve evaluator. Evaluation is pure, so copies share the
// underlying callable and may be sampled concurrently.
class Curve {
public:
    using EvalFn = std::function<CurveSample(double)>;

    Curve() = default;
    Curve(Space space, Interval domain, EvalFn eval)
        : space_(space), domain_(domain), eval_(std::move(eval)) {}

    Space space() const { return space_; }
    const Interval& domain() const { return domain_; }

    CurveSample sample(double v) const {
        CurveSample s = eval_(v);
        if (!all_finite(s.position) || !all_finite(s.d1) || !all_finite(s.d2)
            || !all_finite(s.d3))
            throw DomainError("curve sample is not finite at v = " + format_double(v));
        return s;
    }

private:
    Space space_ = Space::Free;
    Interval domain_{};
    EvalFn eval_;
};

// A parsed curve: three component expressions in the parameter v plus an
// ambient-space tag and a domain.
struct CurveSpec {
    Space space = Space::Free;
    ExprPtr x, y, z;
    Interval domain;

    Curve evaluator() const {
        ExprPtr ex = x, ey = y, ez = z;
        return Curve(space, domain, [ex, ey, ez](double v) {
            const Jet3 jv = jet_variable(v);
            return to_sample({eval_expr(ex, jv), eval_expr(ey, jv), eval_expr(ez, jv)});
        });
    }
};

inline CurveSample eval_curve(const CurveSpec& spec, double v) {
    return spec.evaluator().sample(v);
}

// ---------------------------------------------------------------------------
// Curve-spec files: line oriented `key = value`, '#' starts a comment.
// Keys: space ("S12"|"H2"|"Free"), x, y, z (quoted expressions),
// domain (two floats). Unknown keys are errors.

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::string unquote(const std::string& s, int line_no) {
    if (s.size() < 2 || s.front() != '"' || s.back() != '"')
        throw ParseError("curve file line " + std::to_string(line_no)
                             + ": expression must be double-quoted",
                         0);
    return s.substr(1, s.size() - 2);
}

} // namespace detail

inline CurveSpec parse_curve_file(std::istream& in) {
    CurveSpec spec;
    bool have_space = false, have_x = false, have_y = false, have_z = false,
         have_domain = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("curve file line " + std::to_string(line_no)
                                 + ": expected key = value",
                             0);
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key == "space") {
            if (value == "S12") spec.space = Space::S12;
            else if (value == "H2") spec.space = Space::H2;
            else if (value == "Free") spec.space = Space::Free;
            else
                throw ParseError("curve file line " + std::to_string(line_no)
                                     + ": unknown space '" + value + "'",
                                 0);
            have_space = true;
        } else if (key == "x" || key == "y" || key == "z") {
            ExprPtr e = parse_expression(detail::unquote(value, line_no));
            if (key == "x") { spec.x = e; have_x = true; }
            else if (key == "y") { spec.y = e; have_y = true; }
            else { spec.z = e; have_z = true; }
        } else if (key == "domain") {
            std::string v = value;
            std::replace(v.begin(), v.end(), ',', ' ');
            std::istringstream ss(v);
            if (!(ss >> spec.domain.lo >> spec.domain.hi))
                throw ParseError("curve file line " + std::to_string(line_no)
                                     + ": domain needs two floats",
                                 0);
            std::string rest;
            if (ss >> rest)
                throw ParseError("curve file line " + std::to_string(line_no)
                                     + ": domain needs exactly two floats",
                                 0);
            have_domain = true;
        } else {
            throw ParseError("curve file line " + std::to_string(line_no)
                                 + ": unknown key '" + key + "'",
                             0);
        }
    }
    if (!(have_space && have_x && have_y && have_z && have_domain))
        throw ParseError("curve file is missing one of space/x/y/z/domain", 0);
    if (!(spec.domain.lo < spec.domain.hi))
        throw BadParameter("curve domain must satisfy v_min < v_max");
    return spec;
}

inline CurveSpec parse_curve_file(const std::string& text) {
    std::istringstream in(text);
    return parse_curve_file(in);
}

// ---------------------------------------------------------------------------
// Presets.
//   example_336          (sin v, cos v, 0)            on S12
//   example_46           (sinh v, 0, cosh v)          on H2
//   pseudo_circle_s12(c) (c, r sinh(v/r), r cosh(v/r)) with r = sqrt(c^2-1)
//   pseudo_circle_h2(c)  (r cos(v/r), r sin(v/r), c)
// The pseudo-circles have constant geodesic curvature c/sqrt(c^2-1).

inline CurveSpec preset(const std::string& name, std::span<const double> params = {}) {
    const double two_pi = 2.0 * std::numbers::pi;
    auto div_by_r = [](double r) {
        return make_binary(BinaryOp::Div, make_variable(), make_number(r));
    };
    if (name == "example_336") {
        CurveSpec s;
        s.space = Space::S12;
        s.x = make_unary(UnaryOp::Sin, make_variable());
        s.y = make_unary(UnaryOp::Cos, make_variable());
        s.z = make_number(0.0);
        s.domain = {0.0, two_pi};
        return s;
    }
    if (name == "example_46") {
        CurveSpec s;
        s.space = Space::H2;
        s.x = make_unary(UnaryOp::Sinh, make_variable());
        s.y = make_number(0.0);
        s.z = make_unary(UnaryOp::Cosh, make_variable());
        s.domain = {0.0, 2.0};
        return s;
    }
    if (name == "pseudo_circle_s12" || name == "pseudo_circle_h2") {
        if (params.empty())
            throw BadParameter(name + " needs the parameter c");
        const double c = params[0];
        if (!(c > 1.0)) throw BadParameter(name + " needs c > 1");
        const double r = std::sqrt(c * c - 1.0);
        CurveSpec s;
        if (name == "pseudo_circle_s12") {
            s.space = Space::S12;
            s.x = make_number(c);
            s.y = make_binary(BinaryOp::Mul, make_number(r),
                              make_unary(UnaryOp::Sinh, div_by_r(r)));
            s.z = make_binary(BinaryOp::Mul, make_number(r),
                              make_unary(UnaryOp::Cosh, div_by_r(r)));
            // short default domain: cosh(v/r) must stay small enough that
            // <f,f> - 1 cancels below 1e-12
            s.domain = {0.0, 3.0};
            return s;
        } else {
            s.space = Space::H2;
            s.x = make_binary(BinaryOp::Mul, make_number(r),
                              make_unary(UnaryOp::Cos, div_by_r(r)));
            s.y = make_binary(BinaryOp::Mul, make_number(r),
                              make_unary(UnaryOp::Sin, div_by_r(r)));
            s.z = make_number(c);
        }
        s.domain = {0.0, two_pi};
        return s;
    }
    throw UnknownPreset("unknown preset '" + name + "'");
}

// ---------------------------------------------------------------------------
// Validation.

// Max over a uniform grid of |<f,f> -+ 1|; the caller compares against its
// own tolerance.
inline double validate_on_sphere(const Curve& curve, int n_grid) {
    if (curve.space() == Space::Free)
        throw BadParameter("sphere validation needs an S12 or H2 curve");
    if (n_grid < 2) throw BadParameter("n_grid must be >= 2");
    const double target = curve.space() == Space::S12 ? 1.0 : -1.0;
    double worst = 0.0;
    for (int i = 0; i < n_grid; ++i) {
        const MinkVec3 p = curve.sample(curve.domain().at(i, n_grid)).position;
        worst = std::max(worst, std::fabs(mink_dot(p, p) - target));
    }
    return worst;
}

inline double validate_on_sphere(const CurveSpec& spec, int n_grid) {
    return validate_on_sphere(spec.evaluator(), n_grid);
}

// Max over a uniform grid of |<d1,d1> - 1| (space-like unit speed).
inline double validate_unit_speed(const Curve& curve, int n_grid) {
    if (n_grid < 2) throw BadParameter("n_grid must be >= 2");
    double worst = 0.0;
    for (int i = 0; i < n_grid; ++i) {
        const MinkVec3 t = curve.sample(curve.domain().at(i, n_grid)).d1;
        worst = std::max(worst, std::fabs(mink_dot(t, t) - 1.0));
    }
    return worst;
}

inline double validate_unit_speed(const CurveSpec& spec, int n_grid) {
    return validate_unit_speed(spec.evaluator(), n_grid);
}

// ---------------------------------------------------------------------------
// Arc-length reparametrization.
//
// The returned evaluator maps arc length s in [0, L] to a sample of the same
// trace with exactly unit-speed derivative jets: the chain-rule factors use
// the speed evaluated at the located parameter, so <d1,d1> = 1 holds to
// machine precision independently of the inversion tolerance (which only
// shifts where along the curve the sample sits).

namespace detail {

struct ArcLengthTable {
    Curve base;
    std::vector<double> v_nodes;
    std::vector<double> s_nodes; // s_nodes[i] = arc length at v_nodes[i]
    double tol = 1e-10;

    double speed(double v) const {
        const MinkVec3 d1 = base.sample(v).d1;
        const double q = mink_dot(d1, d1);
        if (q < 0.0)
            throw WrongCausalType("arc-length reparametrization needs a space-like tangent");
        return std::sqrt(q);
    }

    double total() const { return s_nodes.back(); }

    // Arc length from domain().lo to v.
    double arc_length(double v) const {
        const auto it = std::upper_bound(v_nodes.begin(), v_nodes.end(), v);
        std::size_t k = (it == v_nodes.begin()) ? 0 : (it - v_nodes.begin() - 1);
        if (k >= v_nodes.size() - 1) k = v_nodes.size() - 2;
        const double local_tol =
            tol * std::max(1e-3, (v_nodes[k + 1] - v_nodes[k]) / base.domain().span());
        return s_nodes[k]
             + adaptive_simpson([this](double t) { return speed(t); }, v_nodes[k], v,
                                local_tol);
    }

    // Invert s = arc_length(v) by bisection on the node table plus Newton.
    double parameter_at(double s) const {
        s = std::clamp(s, 0.0, total());
        const auto it = std::upper_bound(s_nodes.begin(), s_nodes.end(), s);
        std::size_t k = (it == s_nodes.begin()) ? 0 : (it - s_nodes.begin() - 1);
        if (k >= s_nodes.size() - 1) k = s_nodes.size() - 2;
        double lo = v_nodes[k], hi = v_nodes[k + 1];
        double slo = s_nodes[k], shi = s_nodes[k + 1];
        // a few bisection steps to get a tight bracket
        for (int i = 0; i < 8; ++i) {
            const double mid = 0.5 * (lo + hi);
            const double smid = arc_length(mid);
            if (smid < s) { lo = mid; slo = smid; }
            else { hi = mid; shi = smid; }
        }
        double v = lo + (hi - lo) * ((shi > slo) ? (s - slo) / (shi - slo) : 0.5);
        // Newton polish; the speed is bounded away from zero by construction
        for (int i = 0; i < 6; ++i) {
            const double err = arc_length(v) - s;
            if (std::fabs(err) <= std::max(tol, 1e-14 * std::max(1.0, total()))) break;
            v -= err / speed(v);
            v = std::clamp(v, lo - (hi - lo), hi + (hi - lo));
        }
        return std::clamp(v, base.domain().lo, base.domain().hi);
    }
};

} // namespace detail

inline Curve reparametrize_unit_speed(const Curve& curve, double tol = 1e-10) {
    constexpr int kNodes = 257;
    constexpr double kMinSpeed = 1e-9;

    auto table = std::make_shared<detail::ArcLengthTable>();
    table->base = curve;
    table->tol = tol;
    table->v_nodes.resize(kNodes);
    table->s_nodes.resize(kNodes);

    // Reject degenerate or non-space-like tangents up front.
    for (int i = 0; i < kNodes; ++i) {
        const double v = curve.domain().at(i, kNodes);
        table->v_nodes[i] = v;
        const MinkVec3 d1 = curve.sample(v).d1;
        const double q = mink_dot(d1, d1);
        if (std::sqrt(std::fabs(q)) < kMinSpeed)
            throw DegenerateSpeed("tangent speed below 1e-9 at v = " + format_double(v));
        if (q < 0.0)
            throw WrongCausalType("arc-length reparametrization needs a space-like tangent");
    }
    const double seg_tol = tol / double(kNodes - 1);
    table->s_nodes[0] = 0.0;
    for (int i = 1; i < kNodes; ++i) {
        const double piece =
            adaptive_simpson([&table](double t) { return table->speed(t); },
                             table->v_nodes[i - 1], table->v_nodes[i], seg_tol);
        if (!(piece > 0.0))
            throw DegenerateSpeed("arc length is not increasing near v = "
                                  + format_double(table->v_nodes[i]));
        table->s_nodes[i] = table->s_nodes[i - 1] + piece;
    }

    const Interval s_domain{0.0, table->total()};
    const Space space = curve.space();
    return Curve(space, s_domain, [table](double s) {
        const double v = table->parameter_at(s);
        const CurveSample c = table->base.sample(v);
        // jets of sigma = |c'| as a function of v (order 2 suffices)
        const double sx = mink_dot(c.d1, c.d1);
        const double sx1 = 2.0 * mink_dot(c.d1, c.d2);
        const double sx2 = 2.0 * (mink_dot(c.d2, c.d2) + mink_dot(c.d1, c.d3));
        const double sig = std::sqrt(sx);
        const double sig1 = sx1 / (2.0 * sig);
        const double sig2 = sx2 / (2.0 * sig) - sx1 * sx1 / (4.0 * sx * sig);
        // jet of v(s): dv/ds = 1/sigma
        Jet3 vj;
        vj.c0 = v;
        vj.c1 = 1.0 / sig;
        vj.c2 = -sig1 / (sig * sig * sig);
        vj.c3 = (3.0 * sig1 * sig1 - sig * sig2) / (sig * sig * sig * sig * sig);
        const JetVec3 cj = to_jets(c);
        return to_sample({jet_compose(cj.x1.c0, cj.x1.c1, cj.x1.c2, cj.x1.c3, vj),
                          jet_compose(cj.x2.c0, cj.x2.c1, cj.x2.c2, cj.x2.c3, vj),
                          jet_compose(cj.x3.c0, cj.x3.c1, cj.x3.c2, cj.x3.c3, vj)});
    });
}

inline Curve reparametrize_unit_speed(const CurveSpec& spec, double tol = 1e-10) {
    return reparametrize_unit_speed(spec.evaluator(), tol);
}

} // namespace mink
