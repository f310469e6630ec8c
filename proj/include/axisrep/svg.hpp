#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "axisrep/projection.hpp"

namespace axisrep {

namespace detail {

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

inline const char* class_color(int klass) {
    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    return palette[((klass - 1) % 8 + 8) % 8];
}

}  // namespace detail

/// Deterministic SVG rendering of a planar instance: points as circles,
/// lines clipped to the padded bounding box, one stroke color per
/// direction class.
inline std::string emit_svg(const PlanarInstance& inst) {
    const double width = 640, height = 640;
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(width) +
           "\" height=\"" + detail::fmt(height) + "\" viewBox=\"0 0 " + detail::fmt(width) +
           " " + detail::fmt(height) + "\">\n";
    if (inst.points.empty() && inst.lines.empty()) {
        out += "</svg>\n";
        return out;
    }

    long long min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    auto extend = [&](long long x, long long y) {
        if (first) {
            min_x = max_x = x;
            min_y = max_y = y;
            first = false;
        } else {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    };
    for (const auto& p : inst.points) extend(p[0], p[1]);
    for (const auto& l : inst.lines) extend(l.through[0], l.through[1]);

    double span_x = static_cast<double>(max_x - min_x);
    double span_y = static_cast<double>(max_y - min_y);
    double span = std::max({span_x, span_y, 1.0});
    double pad = 0.08 * span;
    double x0 = static_cast<double>(min_x) - pad, x1 = static_cast<double>(max_x) + pad;
    double y0 = static_cast<double>(min_y) - pad, y1 = static_cast<double>(max_y) + pad;
    double scale = width / std::max(x1 - x0, y1 - y0);

    auto sx = [&](double x) { return (x - x0) * scale; };
    auto sy = [&](double y) { return height - (y - y0) * scale; };  // y grows upward

    // Clip each infinite line to the [x0,x1] x [y0,y1] window.
    for (const auto& l : inst.lines) {
        double px = static_cast<double>(l.through[0]);
        double py = static_cast<double>(l.through[1]);
        double dx = static_cast<double>(l.direction[0]);
        double dy = static_cast<double>(l.direction[1]);
        double t_lo = -1e300, t_hi = 1e300;
        bool visible = true;
        auto clip1 = [&](double d, double lo, double hi, double p) {
            if (d == 0.0) {
                if (p < lo || p > hi) visible = false;
                return;
            }
            double ta = (lo - p) / d, tb = (hi - p) / d;
            if (ta > tb) std::swap(ta, tb);
            t_lo = std::max(t_lo, ta);
            t_hi = std::min(t_hi, tb);
        };
        clip1(dx, x0, x1, px);
        clip1(dy, y0, y1, py);
        if (!visible || t_lo > t_hi) continue;
        double ax = px + t_lo * dx, ay = py + t_lo * dy;
        double bx = px + t_hi * dx, by = py + t_hi * dy;
        out += "  <line x1=\"" + detail::fmt(sx(ax)) + "\" y1=\"" + detail::fmt(sy(ay)) +
               "\" x2=\"" + detail::fmt(sx(bx)) + "\" y2=\"" + detail::fmt(sy(by)) +
               "\" stroke=\"" + detail::class_color(l.direction_class) +
               "\" stroke-width=\"1.5\"/>\n";
    }

    for (const auto& p : inst.points) {
        out += "  <circle cx=\"" + detail::fmt(sx(static_cast<double>(p[0]))) + "\" cy=\"" +
               detail::fmt(sy(static_cast<double>(p[1]))) +
               "\" r=\"4\" fill=\"#222222\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace axisrep
