#pragma once

/*
 * Fresnel integrals and the Euler spiral in the unnormalized convention
 *
 *      C(t) = integral_0^t cos(u^2) du,   S(t) = integral_0^t sin(u^2) du.
 *
 * This is NOT the handbook cos(pi u^2 / 2) convention; every interface in
 * this header uses the plain-u^2 form above.
 *
 * Three independent evaluation routes are provided:
 *
 *   fresnel_series      Maclaurin series, summed in double-double because
 *                       the terms reach ~e^{t^2} before cancelling.
 *                       Accurate to < 1e-12 absolute for |t| <= 8.
 *   fresnel_asymptotic  limit point minus the tail integral_t^inf e^{iu^2} du.
 *                       The tail is integrated on the steepest-descent ray
 *                       u = t + r e^{i pi/4}, where the integrand decays as
 *                       e^{-r^2 - sqrt(2) t r}; expanding that integral in
 *                       powers of 1/t reproduces the classical
 *                       integration-by-parts series, which is used directly
 *                       once |t| is large enough for it to converge below
 *                       1e-13 (|t| >= 6.5).
 *   fresnel_quadrature  adaptive oscillatory quadrature of e^{iu^2} on [0,t].
 *
 * fresnel() switches from the series to the asymptotic route at
 * |t| = 2.0.  The switch point was fixed by scanning [1.5, 2.5]: both
 * routes agree with the quadrature route to better than 1e-12 across the
 * whole window (see fresnel_test.cpp), so the middle of the window is used.
 *
 * Accuracy note: all routes are exact-odd in t (they evaluate at |t| and
 * negate).  Absolute accuracy 1e-12 holds for |t| up to ~1e4; beyond that
 * the conditioning of cos(t^2) in double precision limits the tail phase,
 * and above |t| = 1e12 the limit point itself is returned (the tail is
 * below 5e-13 there).
 */

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "peelspiral/curve.hpp"
#include "peelspiral/detail/ddouble.hpp"
#include "peelspiral/quadrature.hpp"

namespace peelspiral {

/// Cosine and sine Fresnel integrals at a common parameter.
struct FresnelValue {
    double c = 0.0;
    double s = 0.0;
};

/// Series/asymptotic switch parameter for fresnel(); see file comment.
inline constexpr double kFresnelSwitch = 2.0;

/// The coordinate sqrt(pi/8) of the positive winding center.
inline double fresnel_limit_coordinate() {
    return std::sqrt(std::numbers::pi / 8.0);
}

/// The point +-(sqrt(pi/8), sqrt(pi/8)) the spiral winds around.
inline PlanePoint limit_point(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("limit_point: sign must be +1 or -1");
    const double l = fresnel_limit_coordinate();
    return {sign * l, sign * l};
}

namespace detail {

inline void require_finite_parameter(double t) {
    if (!std::isfinite(t))
        throw std::invalid_argument("fresnel: parameter must be finite; use limit_point for the t -> inf limit");
}

// Maclaurin evaluation for t >= 0.  Terms are generated and accumulated
// in double-double: near t = 6 the largest term is ~e^{36} = 4e15, so a
// plain double sum would keep only ~1 correct digit after cancellation.
inline FresnelValue fresnel_series_nonneg(double t) {
    const DDouble t2 = two_prod(t, t);
    const DDouble t4 = mul(t2, t2);

    DDouble p = from(t);      // (-1)^k t^{4k+1} / (2k)!
    DDouble q = mul(t2, t);   // (-1)^k t^{4k+3} / (2k+1)!
    DDouble c = p;            // k = 0: p / 1
    DDouble s = div(q, 3.0);

    for (int k = 1; k < 400; ++k) {
        p = div(mul(p, t4), -double((2 * k - 1) * (2 * k)));
        q = div(mul(q, t4), -double((2 * k) * (2 * k + 1)));
        const DDouble dc = div(p, double(4 * k + 1));
        const DDouble ds = div(q, double(4 * k + 3));
        c = add(c, dc);
        s = add(s, ds);
        const double scale = 1.0 + std::abs(c.hi) + std::abs(s.hi);
        if (std::abs(dc.hi) < 1e-16 * scale && std::abs(ds.hi) < 1e-16 * scale) break;
    }
    return {to_double(c), to_double(s)};
}

// Tail F(t) = integral_t^inf e^{iu^2} du on the steepest-descent ray
// u = t + r e^{i pi/4}:
//   F(t) = e^{i pi/4} e^{i t^2} integral_0^inf e^{-r^2 - sqrt(2) t r} e^{i sqrt(2) t r} dr.
// The transformed integrand is smooth and exponentially decaying, so a
// fixed composite Kronrod rule reaches machine accuracy.
inline std::complex<double> fresnel_tail_contour(double t) {
    const double s2t = std::numbers::sqrt2 * t;
    // Truncate where e^{-r^2 - s2t r} < e^{-42} ~ 5.7e-19.
    const double r_max = 0.5 * (-s2t + std::sqrt(s2t * s2t + 4.0 * 42.0));
    int panels = 8;
    panels = std::max(panels, int(std::ceil(r_max / 0.4)));
    panels = std::max(panels, int(std::ceil(r_max * s2t / 3.0)));

    auto g = [s2t](double r) -> std::complex<double> {
        return std::exp(std::complex<double>(-r * (r + s2t), s2t * r));
    };
    std::complex<double> sum;
    for (int i = 0; i < panels; ++i) {
        const double a = r_max * i / panels;
        const double b = r_max * (i + 1) / panels;
        sum += eval_panel_gk15(g, a, b).value;
    }
    const std::complex<double> rotation =
        std::polar(1.0, 0.25 * std::numbers::pi) * std::polar(1.0, t * t);
    return rotation * sum;
}

// Integration-by-parts expansion of the same tail,
//   F(t) = -e^{i t^2} sum_m (2m-1)!! / ((2i)^{m+1} t^{2m+1}),
// truncated at the smallest term.  Only used where it converges below
// roughly 1e-13 (|t| >= 6.5).
inline std::complex<double> fresnel_tail_ibp(double t) {
    const std::complex<double> minus_i(0.0, -1.0);
    std::complex<double> term = std::complex<double>(0.0, -0.5 / t);
    std::complex<double> sum = term;
    double prev_mag = std::abs(term);
    for (int m = 1; m <= 60; ++m) {
        term *= minus_i * (double(2 * m - 1) / (2.0 * t * t));
        const double mag = std::abs(term);
        if (mag >= prev_mag) break;
        sum += term;
        if (mag < 1e-18) break;
        prev_mag = mag;
    }
    return -std::polar(1.0, t * t) * sum;
}

inline FresnelValue fresnel_asymptotic_nonneg(double t) {
    const double l = fresnel_limit_coordinate();
    if (t > 1e12) return {l, l};  // tail below 5e-13
    const std::complex<double> tail = t >= 6.5 ? fresnel_tail_ibp(t) : fresnel_tail_contour(t);
    return {l - tail.real(), l - tail.imag()};
}

inline FresnelValue apply_sign(FresnelValue v, double t) {
    return std::signbit(t) ? FresnelValue{-v.c, -v.s} : v;
}

} // namespace detail

/// Maclaurin-series route.  Valid for |t| <= 8 (throws beyond: the
/// double-double accumulation cannot deliver 1e-12 there).
inline FresnelValue fresnel_series(double t) {
    detail::require_finite_parameter(t);
    if (std::abs(t) > 8.0)
        throw std::invalid_argument("fresnel_series: series route is limited to |t| <= 8");
    return detail::apply_sign(detail::fresnel_series_nonneg(std::abs(t)), t);
}

/// Limit-point-minus-tail route; see file comment.
inline FresnelValue fresnel_asymptotic(double t) {
    detail::require_finite_parameter(t);
    if (t == 0.0) return {0.0, 0.0};
    return detail::apply_sign(detail::fresnel_asymptotic_nonneg(std::abs(t)), t);
}

/// Adaptive-quadrature route over [0, |t|].
inline FresnelValue fresnel_quadrature(double t, const QuadratureSpec& spec = {1e-12, 1e-12, 1'000'000}) {
    detail::require_finite_parameter(t);
    const double tm = std::abs(t);
    const auto z = integrate_oscillatory([](double u) { return u * u; },
                                         [](double u) { return 2.0 * u; }, 0.0, tm, spec);
    return detail::apply_sign({z.value.real(), z.value.imag()}, t);
}

/// Production evaluator: series for |t| <= kFresnelSwitch, asymptotic
/// beyond.  Odd in t bit-exactly; absolute accuracy better than 1e-12.
inline FresnelValue fresnel(double t) {
    detail::require_finite_parameter(t);
    const double tm = std::abs(t);
    const FresnelValue v = tm <= kFresnelSwitch ? detail::fresnel_series_nonneg(tm)
                                                : detail::fresnel_asymptotic_nonneg(tm);
    return detail::apply_sign(v, t);
}

/// The Euler spiral point (C(t), S(t)).
inline PlanePoint euler_point(double t) {
    const FresnelValue v = fresnel(t);
    return {v.c, v.s};
}

/// Signed curvature of the Euler spiral: kappa(t) = 2t (the radius of
/// curvature is 1/(2t)).
inline double euler_curvature(double t) { return 2.0 * t; }

/// Uniform sampling of the Euler spiral on [t_min, t_max].  Tangent angle
/// is t^2 and curvature 2t.
inline SampledCurve sample_euler(double t_min, double t_max, int n) {
    if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_min < t_max))
        throw std::invalid_argument("sample_euler: requires finite t_min < t_max");
    if (n < 2) throw std::invalid_argument("sample_euler: requires n >= 2");

    SampledCurve curve;
    curve.reserve(n);
    const double step = (t_max - t_min) / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double t = i == n - 1 ? t_max : t_min + i * step;
        curve.push_back({t, euler_point(t), t * t, euler_curvature(t)});
    }
    return curve;
}

/// Unit-speed transition curve with kappa(s) = curvature_rate * s,
/// realized as the Euler spiral scaled by lambda = sqrt(2/curvature_rate).
/// Starts at the origin with zero tangent angle and zero curvature.
inline SampledCurve clothoid_transition(double curvature_rate, double length, int n) {
    if (!(curvature_rate > 0.0) || !std::isfinite(curvature_rate))
        throw std::invalid_argument("clothoid_transition: curvature_rate must be positive");
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("clothoid_transition: length must be positive");
    if (n < 2) throw std::invalid_argument("clothoid_transition: requires n >= 2");

    const double lambda = std::sqrt(2.0 / curvature_rate);
    SampledCurve curve;
    curve.reserve(n);
    const double step = length / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double s = i == n - 1 ? length : i * step;
        const double te = s / lambda;
        curve.push_back({s, lambda * euler_point(te), te * te, curvature_rate * s});
    }
    return curve;
}

} // namespace peelspiral
