#pragma once

// Deterministic random test curves on S12 / H2: draw a smooth ambient curve
// y(v) with random low-order harmonic coefficients, project it onto the
// sphere (f = y/sqrt|<y,y>|), reject draws that violate the sign or
// space-like-tangent conditions, then reparametrize by arc length. Seeded
// with SplitMix64 so every run produces identical curves.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "mink/curve.hpp"
#include "mink/errors.hpp"
#include "mink/jet.hpp"
#include "mink/rng.hpp"
#include "mink/sabban.hpp"

namespace mink {

enum class RandomCurveKind {
    Generic,       // wanders around a geodesic-like base, kappa_g near 0
    HighCurvature, // wanders around a pseudo-circle, kappa_g^2 > 1
};

struct RandomCurveOptions {
    double wiggle = 0.0;      // harmonic amplitude; 0 picks a kind-based default
    double min_kg_sq = 0.0;   // if > 0, require kappa_g^2 >= this on the grid
    double max_abs_kg = 0.0;  // if > 0, require |kappa_g| <= this
    double min_kg_spread = 0.0;
    int check_grid = 41;
};

namespace detail {

// a0 + sum_k (a_k cos(kv) + b_k sin(kv)), k = 1, 2
struct Harmonic {
    double a0 = 0.0;
    std::array<double, 2> ac{}, bs{};

    static Harmonic draw(SplitMix64& rng, double amp, bool with_constant) {
        Harmonic h;
        h.a0 = with_constant ? rng.uniform(-amp, amp) : 0.0;
        for (int k = 0; k < 2; ++k) {
            h.ac[k] = rng.uniform(-amp, amp);
            h.bs[k] = rng.uniform(-amp, amp);
        }
        return h;
    }

    Jet3 operator()(const Jet3& v) const {
        Jet3 acc = jet_constant(a0);
        for (int k = 0; k < 2; ++k) {
            const Jet3 kv = double(k + 1) * v;
            acc = acc + ac[k] * cos(kv) + bs[k] * sin(kv);
        }
        return acc;
    }
};

} // namespace detail

inline Curve random_spherical_curve(Space space, RandomCurveKind kind, std::uint64_t seed,
                                    RandomCurveOptions opts = {}) {
    if (space != Space::S12 && space != Space::H2)
        throw BadParameter("random curves live on S12 or H2");
    const double wiggle =
        opts.wiggle > 0.0 ? opts.wiggle
                          : (kind == RandomCurveKind::Generic ? 0.12 : 0.04);

    for (std::uint64_t attempt = 0; attempt < 200; ++attempt) {
        SplitMix64 rng(seed * 0x2545F4914F6CDD1Dull + attempt * 0x9E3779B97F4A7C15ull + 1);
        const auto rho = detail::Harmonic::draw(rng, wiggle, true);  // radial factor
        const auto psi = detail::Harmonic::draw(rng, wiggle, false); // phase shift
        const auto mu = detail::Harmonic::draw(rng, wiggle, true);   // third component

        Interval domain{0.0, 2.0 * std::numbers::pi};
        std::function<JetVec3(Jet3)> ambient;
        if (kind == RandomCurveKind::Generic) {
            if (space == Space::S12) {
                // around the circle (sin v, cos v, 0)
                ambient = [rho, psi, mu](const Jet3& v) -> JetVec3 {
                    const Jet3 scale = jet_constant(1.0) + rho(v);
                    const Jet3 phase = v + psi(v);
                    return {scale * sin(phase), scale * cos(phase), mu(v)};
                };
            } else {
                // around the geodesic (sinh v, 0, cosh v)
                domain = {-1.4, 1.4};
                ambient = [rho, psi, mu](const Jet3& v) -> JetVec3 {
                    const Jet3 scale = jet_constant(1.0) + 0.5 * rho(v);
                    const Jet3 phase = v + psi(v);
                    return {scale * sinh(phase) + 0.5 * (rho(v) - mu(v)),
                            mu(v), scale * cosh(phase)};
                };
            }
        } else {
            const double c = rng.uniform(1.35, 1.9);
            const double r = std::sqrt(c * c - 1.0);
            if (space == Space::S12) {
                // around the pseudo-circle (c, r sinh(v/r), r cosh(v/r)); the
                // radial and axial wiggles keep <y,y> bounded near 1
                domain = {0.0, 2.4};
                ambient = [rho, psi, mu, c, r](const Jet3& v) -> JetVec3 {
                    const Jet3 rr = jet_constant(r) + rho(v);
                    const Jet3 phase = v / r + psi(v);
                    return {jet_constant(c) + mu(v), rr * sinh(phase), rr * cosh(phase)};
                };
            } else {
                ambient = [rho, psi, mu, c, r](const Jet3& v) -> JetVec3 {
                    const Jet3 rr = jet_constant(r) + rho(v);
                    const Jet3 phase = v / r + psi(v);
                    return {rr * cos(phase), rr * sin(phase), jet_constant(c) + mu(v)};
                };
            }
        }

        const double sphere_sign = space == Space::S12 ? 1.0 : -1.0;
        auto projected = [ambient, sphere_sign](double v) -> CurveSample {
            const JetVec3 y = ambient(jet_variable(v));
            const Jet3 q = sphere_sign * mink_dot(y, y);
            const Jet3 inv = jet_constant(1.0) / sqrt(q); // throws if q <= 0
            return to_sample({y.x1 * inv, y.x2 * inv, y.x3 * inv});
        };
        const Curve raw(space, domain, projected);

        // sign condition and space-like tangent, with margins
        bool ok = true;
        constexpr int kProbe = 65;
        for (int i = 0; i < kProbe && ok; ++i) {
            const double v = domain.at(i, kProbe);
            const JetVec3 y = ambient(jet_variable(v));
            if (sphere_sign * mink_dot(y, y).c0 < 0.2) ok = false;
            if (ok) {
                const CurveSample s = raw.sample(v);
                if (mink_dot(s.d1, s.d1) < 1e-4) ok = false;
            }
        }
        if (!ok) continue;

        // the probe grid is coarser than the reparametrization's own checks,
        // so a draw can still fail in there; reject it and move on
        Curve unit;
        try {
            unit = reparametrize_unit_speed(raw, 1e-10);
        } catch (const Error&) {
            continue;
        }

        if (opts.min_kg_sq > 0.0 || opts.max_abs_kg > 0.0 || opts.min_kg_spread > 0.0) {
            const KappaGRange kg = kappa_g_range(unit, opts.check_grid);
            const double min_abs =
                (kg.min <= 0.0 && kg.max >= 0.0)
                    ? 0.0
                    : std::min(std::fabs(kg.min), std::fabs(kg.max));
            const double max_abs = std::max(std::fabs(kg.min), std::fabs(kg.max));
            if (opts.min_kg_sq > 0.0 && min_abs * min_abs < opts.min_kg_sq) continue;
            if (opts.max_abs_kg > 0.0 && max_abs > opts.max_abs_kg) continue;
            if (opts.min_kg_spread > 0.0 && kg.spread() < opts.min_kg_spread) continue;
        }
        return unit;
    }
    throw Error("random curve generation exhausted its attempt budget");
}

} // namespace mink
