#pragma once

/*
 * The two classical uses of the Euler spiral covered here:
 *
 *  - Slit diffraction: the illumination intensity at a point behind a
 *    slit is the squared distance between two points on the spiral.
 *    The mapping from physical slit geometry to spiral parameters is
 *    left to the caller; this module takes the parameters directly.
 *
 *  - Railway transitions: a vehicle at constant speed whose curvature
 *    grows at a constant rate traces a clothoid arc
 *    (euler_spiral clothoid_transition, re-exported here with
 *    engineering-facing names).
 */

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "peelspiral/curve.hpp"
#include "peelspiral/fresnel.hpp"

namespace peelspiral {

/// Chord endpoints on the Euler spiral, as Fresnel parameters.
/// +-infinity select the spiral's asymptotic endpoints
/// +-(sqrt(pi/8), sqrt(pi/8)).  Finite endpoints are stored in
/// ascending order, so the chord is direction-independent.
class SlitChord {
public:
    SlitChord(double t1, double t2) : t1_(t1), t2_(t2) {
        if (std::isnan(t1) || std::isnan(t2))
            throw std::invalid_argument("SlitChord: parameters must not be NaN");
        if (t2_ < t1_) std::swap(t1_, t2_);
    }

    static SlitChord open_aperture() {
        const double inf = std::numeric_limits<double>::infinity();
        return {-inf, inf};
    }

    double t1() const { return t1_; }
    double t2() const { return t2_; }

private:
    double t1_, t2_;
};

namespace detail {

inline PlanePoint chord_endpoint(double t) {
    if (std::isinf(t)) return limit_point(t > 0 ? 1 : -1);
    return euler_point(t);
}

} // namespace detail

/// Squared chord length |E(t2) - E(t1)|^2; proportional to the
/// illumination intensity behind the slit (unnormalized: the fully open
/// aperture gives pi).
inline double slit_intensity(const SlitChord& chord) {
    if (chord.t1() == chord.t2()) return 0.0;
    const PlanePoint d = detail::chord_endpoint(chord.t2()) - detail::chord_endpoint(chord.t1());
    return d.x * d.x + d.y * d.y;
}

/// Element-wise slit_intensity over a profile of chords.
inline std::vector<double> intensity_profile(const std::vector<SlitChord>& chords) {
    if (chords.empty()) throw std::invalid_argument("intensity_profile: chord list must be non-empty");
    std::vector<double> out;
    out.reserve(chords.size());
    for (const SlitChord& c : chords) out.push_back(slit_intensity(c));
    return out;
}

/// Track transition easement: unit-speed curve whose curvature grows as
/// curvature_rate * arclength.  Thin wrapper over clothoid_transition.
inline SampledCurve railway_transition(double curvature_rate, double length, int n) {
    return clothoid_transition(curvature_rate, length, n);
}

} // namespace peelspiral
