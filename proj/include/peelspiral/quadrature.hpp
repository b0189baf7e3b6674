#pragma once

/*
 * Deterministic adaptive quadrature for real- and complex-valued
 * integrands of one real variable.
 *
 * The scheme is classic panel subdivision with an embedded rule pair:
 * each panel is evaluated with the 15-point Kronrod extension of the
 * 7-point Gauss rule, and |K15 - G7| serves as the panel error estimate.
 * The panel with the largest estimate is split until the summed estimate
 * meets max(abs_tol, rel_tol * |value|).  Ties are broken toward the
 * panel with the smaller lower bound, and the final value is summed over
 * panels sorted by position, so identical inputs produce bit-identical
 * results.
 *
 * Only lo <= hi is accepted; callers integrate reversed intervals by
 * negating the result themselves.
 *
 * Everything here is a pure function of its arguments with no shared
 * state, so concurrent use from many threads is safe.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace peelspiral {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 1'000'000;
};

inline void validate(const QuadratureSpec& spec) {
    if (!(spec.abs_tol > 0.0) || !std::isfinite(spec.abs_tol))
        throw std::invalid_argument("QuadratureSpec: abs_tol must be positive and finite");
    if (!(spec.rel_tol >= 0.0) || !std::isfinite(spec.rel_tol))
        throw std::invalid_argument("QuadratureSpec: rel_tol must be non-negative and finite");
    if (spec.max_subdivisions < 1)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
}

template <class T>
struct QuadratureResult {
    T value{};
    double error_estimate = 0.0;
    int subdivisions_used = 0;
};

/// Thrown when the integrator cannot meet the tolerance within the
/// subdivision budget (carrying the best estimate reached) or when the
/// integrand produces a non-finite value (carrying the sample point).
class QuadratureError : public std::runtime_error {
public:
    enum class Kind { non_convergence, non_finite_sample };

    QuadratureError(Kind kind, std::string message, std::complex<double> best_estimate,
                    double error_bound, double sample_point)
        : std::runtime_error(std::move(message)),
          kind_(kind),
          best_estimate_(best_estimate),
          error_bound_(error_bound),
          sample_point_(sample_point) {}

    Kind kind() const { return kind_; }
    std::complex<double> best_estimate() const { return best_estimate_; }
    double error_bound() const { return error_bound_; }
    /// Offending abscissa for non_finite_sample; NaN otherwise.
    double sample_point() const { return sample_point_; }

private:
    Kind kind_;
    std::complex<double> best_estimate_;
    double error_bound_;
    double sample_point_;
};

namespace detail {

// G7/K15 abscissae and weights on [-1, 1], positive half (last entry is
// the midpoint).  Gauss weights apply to odd-indexed abscissae.
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

inline constexpr double kK15Weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

inline constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double lo = 0.0;
    double hi = 0.0;
    std::complex<double> value;
    double error = 0.0;
};

// Max-heap on error, ties toward the smaller lower bound.
struct PanelWorse {
    bool operator()(const Panel& a, const Panel& b) const {
        if (a.error != b.error) return a.error < b.error;
        return a.lo > b.lo;
    }
};

template <class F>
Panel eval_panel_gk15(F&& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    auto sample = [&](double x) -> std::complex<double> {
        const std::complex<double> y = f(x);
        if (!std::isfinite(y.real()) || !std::isfinite(y.imag()))
            throw QuadratureError(QuadratureError::Kind::non_finite_sample,
                                  "integrand returned a non-finite value at u = " + std::to_string(x),
                                  {}, std::numeric_limits<double>::infinity(), x);
        return y;
    };

    const std::complex<double> fc = sample(center);
    std::complex<double> k15 = kK15Weights[7] * fc;
    std::complex<double> g7 = kG7Weights[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kGk15Nodes[j];
        const std::complex<double> pair = sample(center - dx) + sample(center + dx);
        k15 += kK15Weights[j] * pair;
        if (j % 2 == 1) g7 += kG7Weights[j / 2] * pair;
    }
    k15 *= half;
    g7 *= half;
    return Panel{lo, hi, k15, std::abs(k15 - g7)};
}

template <class F>
QuadratureResult<std::complex<double>> adaptive_gk(F&& f, std::vector<Panel> panels,
                                                   const QuadratureSpec& spec,
                                                   int subdivisions_used) {
    auto total_of = [](const std::vector<Panel>& ps) {
        std::vector<const Panel*> order(ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i) order[i] = &ps[i];
        std::sort(order.begin(), order.end(),
                  [](const Panel* a, const Panel* b) { return a->lo < b->lo; });
        std::complex<double> value;
        double error = 0.0;
        for (const Panel* p : order) {
            value += p->value;
            error += p->error;
        }
        return QuadratureResult<std::complex<double>>{value, error};
    };

    PanelWorse worse;
    std::make_heap(panels.begin(), panels.end(), worse);

    std::complex<double> value;
    double error = 0.0;
    for (const Panel& p : panels) {
        value += p.value;
        error += p.error;
    }

    while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
        if (subdivisions_used >= spec.max_subdivisions) {
            auto best = total_of(panels);
            throw QuadratureError(QuadratureError::Kind::non_convergence,
                                  "quadrature did not converge within " +
                                      std::to_string(spec.max_subdivisions) + " subdivisions",
                                  best.value, best.error_estimate,
                                  std::numeric_limits<double>::quiet_NaN());
        }
        std::pop_heap(panels.begin(), panels.end(), worse);
        const Panel parent = panels.back();
        panels.pop_back();

        const double mid = 0.5 * (parent.lo + parent.hi);
        if (!(parent.lo < mid && mid < parent.hi)) {
            // Interval no longer splittable in floating point; accept it
            // as converged so the loop cannot stall on it.
            error = std::max(error - parent.error, 0.0);
            Panel fixed = parent;
            fixed.error = 0.0;
            panels.push_back(fixed);
            std::push_heap(panels.begin(), panels.end(), worse);
            continue;
        }

        value -= parent.value;
        error -= parent.error;
        Panel left = eval_panel_gk15(f, parent.lo, mid);
        Panel right = eval_panel_gk15(f, mid, parent.hi);
        value += left.value + right.value;
        error += left.error + right.error;
        error = std::max(error, 0.0);
        panels.push_back(left);
        std::push_heap(panels.begin(), panels.end(), worse);
        panels.push_back(right);
        std::push_heap(panels.begin(), panels.end(), worse);
        ++subdivisions_used;
    }

    auto result = total_of(panels);
    result.subdivisions_used = subdivisions_used;
    return result;
}

inline void check_interval(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("integration bounds must be finite");
    if (!(lo <= hi))
        throw std::invalid_argument("integration requires lo <= hi; negate for reversed intervals");
}

} // namespace detail

/// Integrate f over [lo, hi].  f may return double or complex<double>;
/// the result value has the same type.  Deterministic: identical inputs
/// yield bit-identical results.
template <class F>
auto integrate(F&& f, double lo, double hi, const QuadratureSpec& spec = {})
    -> QuadratureResult<std::invoke_result_t<F&, double>> {
    using R = std::invoke_result_t<F&, double>;
    validate(spec);
    detail::check_interval(lo, hi);
    if (lo == hi) return {};

    auto complex_f = [&f](double u) -> std::complex<double> {
        return std::complex<double>(f(u));
    };
    std::vector<detail::Panel> initial;
    initial.push_back(detail::eval_panel_gk15(complex_f, lo, hi));
    auto r = detail::adaptive_gk(complex_f, std::move(initial), spec, 0);
    if constexpr (std::is_same_v<R, std::complex<double>>) {
        return r;
    } else {
        static_assert(std::is_convertible_v<R, double>,
                      "integrand must return double or std::complex<double>");
        return QuadratureResult<double>{r.value.real(), r.error_estimate, r.subdivisions_used};
    }
}

/// Integrate exp(i * phase(u)) over [lo, hi].  phase_rate must be the
/// derivative of phase; it is sampled only at interior points, so the
/// endpoints may have an unbounded derivative as long as phase itself is
/// finite there.  Initial panels are chosen to span at most one phase
/// period before the adaptive refinement takes over.
template <class Phase, class Rate>
QuadratureResult<std::complex<double>> integrate_oscillatory(Phase&& phase, Rate&& rate, double lo,
                                                             double hi,
                                                             const QuadratureSpec& spec = {}) {
    validate(spec);
    detail::check_interval(lo, hi);
    if (lo == hi) return {};

    constexpr double kTwoPi = 6.283185307179586476925286766559;
    auto integrand = [&phase](double u) -> std::complex<double> {
        return std::exp(std::complex<double>(0.0, phase(u)));
    };

    // Split [lo, hi] until each piece spans at most one period, judged by
    // both the endpoint phase difference and the midpoint rate.
    std::vector<std::pair<double, double>> pieces;
    struct Todo {
        double lo, hi;
        int depth;
    };
    std::vector<Todo> stack{{lo, hi, 0}};
    int splits = 0;
    while (!stack.empty()) {
        const Todo piece = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (piece.lo + piece.hi);
        const double span_endpoints = std::abs(phase(piece.hi) - phase(piece.lo));
        const double span_rate = std::abs(rate(mid)) * (piece.hi - piece.lo);
        const bool splittable = piece.lo < mid && mid < piece.hi && piece.depth < 48;
        if (splittable && std::max(span_endpoints, span_rate) > kTwoPi) {
            if (splits >= spec.max_subdivisions)
                throw QuadratureError(QuadratureError::Kind::non_convergence,
                                      "oscillatory pre-subdivision exceeded max_subdivisions",
                                      {}, std::numeric_limits<double>::infinity(),
                                      std::numeric_limits<double>::quiet_NaN());
            ++splits;
            // Right first so the left half is processed next (ascending order).
            stack.push_back({mid, piece.hi, piece.depth + 1});
            stack.push_back({piece.lo, mid, piece.depth + 1});
        } else {
            pieces.emplace_back(piece.lo, piece.hi);
        }
    }

    std::vector<detail::Panel> initial;
    initial.reserve(pieces.size());
    for (auto [a, b] : pieces) initial.push_back(detail::eval_panel_gk15(integrand, a, b));
    return detail::adaptive_gk(integrand, std::move(initial), spec, splits);
}

} // namespace peelspiral
