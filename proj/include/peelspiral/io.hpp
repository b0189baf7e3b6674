#pragma once

/*
 * CSV and SVG emitters for sampled curves and convergence reports.
 *
 * CSV: header `t,x,y,phi,kappa`, comma separated, `\n` newlines, numeric
 * fields at 17 significant digits so a re-parse is bit-identical.
 * Lines starting with `#` are comments and may carry metadata.
 *
 * SVG: a single polyline in a viewBox computed from the data bounding
 * box expanded by margin_fraction, y flipped so the mathematical
 * orientation matches the visual one.  Marker points (the spiral's limit
 * points) are drawn as filled circles of radius twice the stroke width.
 * Output is pure string assembly: identical inputs give identical bytes.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "peelspiral/convergence.hpp"
#include "peelspiral/curve.hpp"

namespace peelspiral {

struct RenderOptions {
    int width_px = 800;
    int height_px = 800;
    double margin_fraction = 0.05;
    double stroke_relative = 0.002;
};

inline void validate(const RenderOptions& opts) {
    if (opts.width_px <= 0 || opts.height_px <= 0)
        throw std::invalid_argument("RenderOptions: dimensions must be positive");
    if (!(opts.margin_fraction >= 0.0 && opts.margin_fraction < 0.5))
        throw std::invalid_argument("RenderOptions: margin_fraction must lie in [0, 0.5)");
    if (!(opts.stroke_relative > 0.0))
        throw std::invalid_argument("RenderOptions: stroke_relative must be positive");
}

/// Shortest-faithful formatting: 17 significant digits round-trip any
/// double exactly.
inline std::string format_double(double v, int significant_digits = 17) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
    return buf;
}

inline void write_curve_csv(std::ostream& os, const SampledCurve& curve,
                            const std::vector<std::string>& comments = {}) {
    for (const std::string& c : comments) os << "# " << c << '\n';
    os << "t,x,y,phi,kappa\n";
    for (const CurveFrame& f : curve) {
        os << format_double(f.t) << ',' << format_double(f.point.x) << ','
           << format_double(f.point.y) << ',' << format_double(f.phi) << ','
           << format_double(f.kappa) << '\n';
    }
}

/// Parse a curve CSV written by write_curve_csv.  Comment lines are
/// skipped; the header is required.
inline SampledCurve read_curve_csv(std::istream& is) {
    SampledCurve curve;
    std::string line;
    bool seen_header = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!seen_header) {
            if (line != "t,x,y,phi,kappa")
                throw std::runtime_error("curve CSV: unexpected header: " + line);
            seen_header = true;
            continue;
        }
        CurveFrame f;
        double* fields[5] = {&f.t, &f.point.x, &f.point.y, &f.phi, &f.kappa};
        const char* p = line.c_str();
        for (int i = 0; i < 5; ++i) {
            char* end = nullptr;
            *fields[i] = std::strtod(p, &end);
            if (end == p || (i < 4 && *end != ',') || (i == 4 && *end != '\0'))
                throw std::runtime_error("curve CSV: malformed row: " + line);
            p = end + (i < 4 ? 1 : 0);
        }
        curve.push_back(f);
    }
    if (!seen_header) throw std::runtime_error("curve CSV: missing header");
    return curve;
}

inline void write_convergence_csv(std::ostream& os, const ConvergenceReport& report) {
    os << "N,T,abs_error,rescaled_error\n";
    for (const ConvergenceEntry& e : report.entries) {
        os << e.windings << ',' << format_double(e.t_rescaled) << ','
           << format_double(e.sup_error_absolute) << ','
           << format_double(e.sup_error_rescaled) << '\n';
    }
    os << "# fitted_slope=" << format_double(report.fitted_slope) << '\n';
}

/// Render points as an SVG polyline; markers become filled circles.
inline std::string curve_svg(const std::vector<PlanePoint>& points, const RenderOptions& opts,
                             const std::vector<PlanePoint>& markers = {}) {
    validate(opts);
    if (points.size() < 2) throw std::invalid_argument("curve_svg: need at least 2 points");

    double x_min = points[0].x, x_max = points[0].x;
    double y_min = points[0].y, y_max = points[0].y;
    auto grow = [&](PlanePoint p) {
        x_min = std::min(x_min, p.x);
        x_max = std::max(x_max, p.x);
        y_min = std::min(y_min, p.y);
        y_max = std::max(y_max, p.y);
    };
    for (const PlanePoint& p : points) grow(p);
    for (const PlanePoint& p : markers) grow(p);

    double width = x_max - x_min;
    double height = y_max - y_min;
    const double diagonal = std::max(std::hypot(width, height), 1e-12);
    width = std::max(width, 1e-12 * diagonal);
    height = std::max(height, 1e-12 * diagonal);
    const double dx = opts.margin_fraction * width;
    const double dy = opts.margin_fraction * height;
    const double stroke = opts.stroke_relative * diagonal;

    auto num = [](double v) { return format_double(v, 9); };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opts.width_px) +
           "\" height=\"" + std::to_string(opts.height_px) + "\" viewBox=\"" + num(x_min - dx) +
           " " + num(-y_max - dy) + " " + num(width + 2.0 * dx) + " " + num(height + 2.0 * dy) +
           "\">\n";
    svg += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"" + num(stroke) +
           "\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) svg += ' ';
        svg += num(points[i].x) + "," + num(-points[i].y);
    }
    svg += "\"/>\n";
    for (const PlanePoint& m : markers) {
        svg += "  <circle cx=\"" + num(m.x) + "\" cy=\"" + num(-m.y) + "\" r=\"" +
               num(2.0 * stroke) + "\" fill=\"black\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

inline std::vector<PlanePoint> curve_points(const SampledCurve& curve) {
    std::vector<PlanePoint> pts;
    pts.reserve(curve.size());
    for (const CurveFrame& f : curve) pts.push_back(f.point);
    return pts;
}

} // namespace peelspiral
