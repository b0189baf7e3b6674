#pragma once

#include <cmath>

namespace peelspiral::detail {

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Used where an alternating series with large intermediate terms must be
// summed to full double accuracy.
struct DDouble {
    double hi = 0.0;
    double lo = 0.0;
};

inline DDouble two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DDouble quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DDouble two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DDouble add(DDouble a, DDouble b) {
    DDouble s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DDouble mul(DDouble a, DDouble b) {
    DDouble p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DDouble mul(DDouble a, double b) {
    DDouble p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DDouble div(DDouble a, double b) {
    const double q1 = a.hi / b;
    DDouble r = two_prod(q1, b);
    const double q2 = ((a.hi - r.hi) - r.lo + a.lo) / b;
    return quick_two_sum(q1, q2);
}

inline DDouble from(double x) { return {x, 0.0}; }
inline double to_double(DDouble x) { return x.hi + x.lo; }

} // namespace peelspiral::detail
