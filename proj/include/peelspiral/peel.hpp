#pragma once

/*
 * The flattened orange-peel spiral.
 *
 * A sphere of radius one is peeled along a spiral strip of width 1/N.
 * Parameterized at unit speed from t = -2*pi*N to 2*pi*N, the flattened
 * curve satisfies
 *
 *     x(t) =   integral_0^t cos(sqrt((2 pi N)^2 - u^2)) du,
 *     y(t) = - integral_0^t sin(sqrt((2 pi N)^2 - u^2)) du,
 *
 * i.e. z(t) = integral_0^t e^{i phi(u)} du with tangent angle
 * phi(u) = -sqrt(a^2 - u^2), a = 2*pi*N, and signed curvature
 * kappa(t) = t / sqrt(a^2 - t^2).  Curvature diverges at the poles
 * |t| = a and vanishes at the equator t = 0, which is why kappa rather
 * than the radius is stored.
 *
 * The phase derivative u/sqrt(a^2-u^2) blows up at |u| = a, so integrals
 * over the outermost 1% of the domain are evaluated after substituting
 * u = a sin(theta); the transformed phase -a cos(theta) has a bounded
 * derivative there.
 */

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "peelspiral/curve.hpp"
#include "peelspiral/quadrature.hpp"

namespace peelspiral {

/// Parameters of a peel: N windings (strip width 1/N) on the unit
/// sphere, quadrature settings for the curve integrals.  The parameter
/// domain is [-a, a] with a = 2*pi*N.
class PeelParams {
public:
    explicit PeelParams(double windings, QuadratureSpec quad = {}) : windings_(windings), quad_(quad) {
        if (!(windings > 0.0) || !std::isfinite(windings))
            throw std::invalid_argument("PeelParams: windings must be positive and finite");
        validate(quad);
    }

    double windings() const { return windings_; }
    /// a = 2*pi*N.
    double half_domain() const { return 2.0 * std::numbers::pi * windings_; }
    const QuadratureSpec& quad() const { return quad_; }

private:
    double windings_;
    QuadratureSpec quad_;
};

/// Region of the unit sphere between two horizontal planes.
class SphereStrip {
public:
    SphereStrip(double h1, double h2) : h1_(h1), h2_(h2) {
        if (!(-1.0 <= h1 && h1 <= h2 && h2 <= 1.0))
            throw std::invalid_argument("SphereStrip: requires -1 <= h1 <= h2 <= 1");
    }
    double h1() const { return h1_; }
    double h2() const { return h2_; }

private:
    double h1_, h2_;
};

namespace detail {

inline void require_in_domain(double t, const PeelParams& p, bool open) {
    const double a = p.half_domain();
    if (open ? !(std::abs(t) < a) : !(std::abs(t) <= a))
        throw std::invalid_argument(open ? "peel: |t| must be < 2*pi*N (curvature diverges at the poles)"
                                         : "peel: |t| must be <= 2*pi*N");
}

// Radicand written as (a-u)(a+u) and clamped at 0: quadrature nodes may
// land one ulp past a.
inline double peel_phase_raw(double u, double a) {
    return -std::sqrt(std::max(a - std::abs(u), 0.0) * (a + std::abs(u)));
}

// integral_{u0}^{u1} e^{i phi(u)} du for 0 <= u0 <= u1 <= a, splitting at
// 0.99 a into the direct oscillatory evaluation and the u = a sin(theta)
// substitution near the pole.
inline std::complex<double> peel_segment(double u0, double u1, const PeelParams& p) {
    const double a = p.half_domain();
    const double pole_cut = 0.99 * a;
    std::complex<double> z;

    const double direct_hi = std::min(u1, pole_cut);
    if (u0 < direct_hi) {
        auto phase = [a](double u) { return peel_phase_raw(u, a); };
        auto rate = [a](double u) { return u / std::sqrt(std::max(a - u, 0.0) * (a + u)); };
        z += integrate_oscillatory(phase, rate, u0, direct_hi, p.quad()).value;
    }
    if (u1 > pole_cut) {
        const double theta0 = std::asin(std::min(std::max(u0, pole_cut) / a, 1.0));
        const double theta1 = std::asin(std::min(u1 / a, 1.0));
        auto f = [a](double theta) -> std::complex<double> {
            const double w = a * std::cos(theta);
            return w * std::exp(std::complex<double>(0.0, -w));
        };
        z += integrate(f, theta0, theta1, p.quad()).value;
    }
    return z;
}

} // namespace detail

/// Height s = t/(2*pi*N) of the peel point on the sphere at time t.
inline double peel_height(double t, const PeelParams& p) {
    detail::require_in_domain(t, p, false);
    return t / p.half_domain();
}

/// Signed curvature t / sqrt(a^2 - t^2) of the flattened spiral.  The
/// sign follows the NE-SW orientation of the strip, matching
/// y(t) = -integral sin(...).
inline double peel_curvature(double t, const PeelParams& p) {
    detail::require_in_domain(t, p, true);
    const double a = p.half_domain();
    return t / std::sqrt((a - t) * (a + t));
}

/// Tangent angle phi(t) = -sqrt(a^2 - t^2); even in t, d(phi)/dt equals
/// the signed curvature.
inline double peel_phase(double t, const PeelParams& p) {
    detail::require_in_domain(t, p, false);
    return detail::peel_phase_raw(t, p.half_domain());
}

/// The flattened peel point z(t).  Odd bit-exactly: evaluated on
/// [0, |t|] and negated for t < 0.
inline PlanePoint peel_point(double t, const PeelParams& p) {
    detail::require_in_domain(t, p, false);
    const std::complex<double> z = detail::peel_segment(0.0, std::abs(t), p);
    if (std::signbit(t)) return {-z.real(), -z.imag()};
    return {z.real(), z.imag()};
}

/// Sample the whole peel on [-a + delta, a - delta], delta = a * 1e-9
/// (the clip keeps the stored curvature finite).  Points are accumulated
/// incrementally along the positive half, one short integral per frame,
/// and mirrored to the negative half, so frame(-t) is exactly the
/// negation of frame(t).
inline SampledCurve sample_peel(const PeelParams& p, int n) {
    if (n < 3) throw std::invalid_argument("sample_peel: requires n >= 3");

    const double a = p.half_domain();
    const double clipped = a - a * 1e-9;
    const double step = 2.0 * clipped / (n - 1);

    // Magnitudes of the positive-side parameters, ascending.
    const bool has_center = n % 2 == 1;
    const int half_count = n / 2;
    std::vector<double> magnitudes(half_count);
    for (int j = 0; j < half_count; ++j)
        magnitudes[j] = has_center ? (j + 1) * step : (j + 0.5) * step;
    if (half_count > 0) magnitudes[half_count - 1] = clipped;

    std::vector<PlanePoint> positive(half_count);
    std::complex<double> z;
    double prev = 0.0;
    for (int j = 0; j < half_count; ++j) {
        z += detail::peel_segment(prev, magnitudes[j], p);
        positive[j] = {z.real(), z.imag()};
        prev = magnitudes[j];
    }

    SampledCurve curve;
    curve.reserve(n);
    for (int j = half_count - 1; j >= 0; --j) {
        const double m = magnitudes[j];
        curve.push_back({-m, -positive[j], peel_phase(m, p), -peel_curvature(m, p)});
    }
    if (has_center) curve.push_back({0.0, {0.0, 0.0}, peel_phase(0.0, p), 0.0});
    for (int j = 0; j < half_count; ++j) {
        const double m = magnitudes[j];
        curve.push_back({m, positive[j], peel_phase(m, p), peel_curvature(m, p)});
    }
    return curve;
}

/// Area of the sphere between heights h1 and h2: 2*pi*(h2 - h1).
inline double strip_area(const SphereStrip& s) {
    return 2.0 * std::numbers::pi * (s.h2() - s.h1());
}

/// Perimeter 2*pi*sqrt(1 - s^2) of the parallel at height s.
inline double parallel_perimeter(double s) {
    if (!(std::abs(s) <= 1.0)) throw std::invalid_argument("parallel_perimeter: requires |s| <= 1");
    return 2.0 * std::numbers::pi * std::sqrt((1.0 - s) * (1.0 + s));
}

/// Width eps / sqrt(1 - s^2) of a strip of axial extent eps at height s.
inline double strip_width(double s, double eps) {
    if (!(std::abs(s) < 1.0)) throw std::invalid_argument("strip_width: requires |s| < 1");
    if (!(eps > 0.0)) throw std::invalid_argument("strip_width: requires eps > 0");
    return eps / std::sqrt((1.0 - s) * (1.0 + s));
}

/// Length of the parameter domain, 4*pi*N.
inline double total_length(const PeelParams& p) {
    return 4.0 * std::numbers::pi * p.windings();
}

} // namespace peelspiral
