#pragma once

/*
 * Empirical verification that the rescaled peel spiral converges to the
 * Euler spiral.
 *
 * For integer N the peel curve satisfies
 *     z(t) ~ sqrt(4 pi N) * E(t / sqrt(4 pi N)),
 * with E the Euler spiral, and the leading remainder comes from the
 * phase term u^4/(8 a^3) dropped in sqrt(a^2-u^2) ~ a - u^2/(2a):
 * integrating it gives |t|^5 / (40 a^3).  Rescaled by sqrt(4 pi N) the
 * sup error over |T| <= const decays like 1/N, which the study below
 * measures as a log-log slope.
 *
 * Integer N only: the derivation drops a global factor e^{-2 pi i N},
 * which equals 1 exactly for integers.  Comparisons for non-integer N
 * would need that extra rotation and are out of scope.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "peelspiral/curve.hpp"
#include "peelspiral/fresnel.hpp"
#include "peelspiral/peel.hpp"
#include "peelspiral/quadrature.hpp"

namespace peelspiral {

struct ConvergenceEntry {
    int windings = 0;             // N
    double t_rescaled = 0.0;      // T
    double sup_error_absolute = 0.0;
    double sup_error_rescaled = 0.0;
};

/// Per-N sup-norm errors with the least-squares slope of
/// log(rescaled error) against log(N).  Entries are sorted by N.
struct ConvergenceReport {
    std::vector<ConvergenceEntry> entries;
    double fitted_slope = 0.0;
};

struct SupError {
    double absolute = 0.0;
    double rescaled = 0.0;
};

namespace detail {

inline void require_windings(int windings) {
    if (windings < 1) throw std::invalid_argument("convergence: N must be a positive integer");
}

inline void require_rescaled_domain(int windings, double t_rescaled) {
    const double bound = std::sqrt(std::numbers::pi * windings);
    if (!(t_rescaled > 0.0) || !std::isfinite(t_rescaled))
        throw std::invalid_argument("convergence: T must be positive and finite");
    if (t_rescaled > bound)
        throw std::invalid_argument("convergence: T = " + std::to_string(t_rescaled) +
                                    " exceeds the domain bound T <= sqrt(pi*N) = " +
                                    std::to_string(bound) + " for N = " + std::to_string(windings));
}

} // namespace detail

/// sqrt(4 pi N) * E(t / sqrt(4 pi N)): the Euler spiral blown up to the
/// peel's scale.
inline PlanePoint rescaled_euler(double t, int windings) {
    detail::require_windings(windings);
    const double scale = std::sqrt(4.0 * std::numbers::pi * windings);
    return scale * euler_point(t / scale);
}

/// Predicted scale |t|^5 / (40 (2 pi N)^3) of the absolute sup error.
inline double error_estimate(double t, int windings) {
    detail::require_windings(windings);
    const double a = 2.0 * std::numbers::pi * windings;
    if (!(std::abs(t) <= a)) throw std::invalid_argument("error_estimate: requires |t| <= 2*pi*N");
    const double t2 = t * t;
    return t2 * t2 * std::abs(t) / (40.0 * a * a * a);
}

/// Sup distance between the peel and the rescaled Euler spiral over
/// n_samples uniform parameters in [-sqrt(4 pi N) T, sqrt(4 pi N) T],
/// reported both in absolute units and divided by sqrt(4 pi N).
inline SupError sup_error(int windings, double t_rescaled, int n_samples = 1001,
                          const QuadratureSpec& quad = {}) {
    detail::require_windings(windings);
    detail::require_rescaled_domain(windings, t_rescaled);
    if (n_samples < 10) throw std::invalid_argument("sup_error: requires n_samples >= 10");

    const double scale = std::sqrt(4.0 * std::numbers::pi * windings);
    const double t_max = scale * t_rescaled;
    const PeelParams params(windings, quad);

    double worst = 0.0;
    const double step = 2.0 * t_max / (n_samples - 1);
    for (int i = 0; i < n_samples; ++i) {
        const double t = i == n_samples - 1 ? t_max : -t_max + i * step;
        worst = std::max(worst, distance(peel_point(t, params), rescaled_euler(t, windings)));
    }
    return {worst, worst / scale};
}

/// Run sup_error for each N and fit the log-log slope of the rescaled
/// errors by ordinary least squares.  Needs at least three values of N.
inline ConvergenceReport convergence_study(std::vector<int> windings_list, double t_rescaled,
                                           int n_samples = 1001, const QuadratureSpec& quad = {}) {
    if (windings_list.size() < 3)
        throw std::invalid_argument("convergence_study: needs at least 3 values of N to fit a slope");
    for (int w : windings_list) {
        detail::require_windings(w);
        detail::require_rescaled_domain(w, t_rescaled);
    }
    std::sort(windings_list.begin(), windings_list.end());

    ConvergenceReport report;
    report.entries.reserve(windings_list.size());
    for (int w : windings_list) {
        const SupError e = sup_error(w, t_rescaled, n_samples, quad);
        report.entries.push_back({w, t_rescaled, e.absolute, e.rescaled});
    }

    // OLS slope of log(rescaled) on log(N).
    const std::size_t m = report.entries.size();
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& e : report.entries) {
        mean_x += std::log(double(e.windings));
        mean_y += std::log(e.sup_error_rescaled);
    }
    mean_x /= double(m);
    mean_y /= double(m);
    double sxy = 0.0, sxx = 0.0;
    for (const auto& e : report.entries) {
        const double dx = std::log(double(e.windings)) - mean_x;
        const double dy = std::log(e.sup_error_rescaled) - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
    }
    report.fitted_slope = sxy / sxx;
    return report;
}

} // namespace peelspiral
