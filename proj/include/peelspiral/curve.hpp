#pragma once

#include <cmath>
#include <vector>

namespace peelspiral {

/// A point (x, y) in the flattening plane, interpretable as the complex
/// value z = x + iy.  Coordinates are dimensionless (sphere-radius units).
struct PlanePoint {
    double x = 0.0;
    double y = 0.0;
};

inline PlanePoint operator+(PlanePoint a, PlanePoint b) { return {a.x + b.x, a.y + b.y}; }
inline PlanePoint operator-(PlanePoint a, PlanePoint b) { return {a.x - b.x, a.y - b.y}; }
inline PlanePoint operator-(PlanePoint a) { return {-a.x, -a.y}; }
inline PlanePoint operator*(double s, PlanePoint p) { return {s * p.x, s * p.y}; }

inline double norm(PlanePoint p) { return std::hypot(p.x, p.y); }
inline double distance(PlanePoint a, PlanePoint b) { return norm(a - b); }

/// Per-parameter state of a sampled curve.  `t` is the arclength
/// parameter, `phi` the tangent angle in radians and `kappa` the signed
/// curvature.  Curvature (not the radius) is stored so that flat points
/// (infinite radius) stay representable.
struct CurveFrame {
    double t = 0.0;
    PlanePoint point;
    double phi = 0.0;
    double kappa = 0.0;
};

/// Ordered sequence of frames with strictly increasing parameter.
using SampledCurve = std::vector<CurveFrame>;

} // namespace peelspiral
