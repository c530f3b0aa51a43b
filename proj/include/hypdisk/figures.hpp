#pragma once

#include <cmath>
#include <ostream>
#include <string>

#include "hypdisk/disks.hpp"
#include "hypdisk/envelope.hpp"
#include "hypdisk/format.hpp"
#include "hypdisk/geom.hpp"

namespace hypdisk {

struct RenderConfig {
    double r = 0.5;
    int n_disks = 15;
    bool show_envelope = true;
    bool show_cone = false;
    int width_px = 800;
    std::string output_path;
};

namespace detail {

// SVG y grows downward; world coordinates are emitted with the sign of the
// imaginary part flipped.
inline std::string svg_pt(Complex z) {
    return format_double(z.real()) + " " + format_double(-z.imag());
}

inline void svg_circle(std::ostream& os, const char* cls, Complex center,
                       double radius, const char* stroke) {
    os << "  <circle class=\"" << cls << "\" cx=\"" << format_double(center.real())
       << "\" cy=\"" << format_double(-center.imag()) << "\" r=\""
       << format_double(radius) << "\" stroke=\"" << stroke << "\"/>\n";
}

inline void svg_line(std::ostream& os, const char* cls, Complex a, Complex b,
                     const char* stroke) {
    os << "  <line class=\"" << cls << "\" x1=\"" << format_double(a.real())
       << "\" y1=\"" << format_double(-a.imag()) << "\" x2=\""
       << format_double(b.real()) << "\" y2=\"" << format_double(-b.imag())
       << "\" stroke=\"" << stroke << "\"/>\n";
}

// Circular arc from `from` to `to`, as an exact SVG arc segment. sweep is
// the SVG sweep flag (1 = clockwise on screen); both arcs here span less
// than a half turn, so the large-arc flag stays 0.
inline void svg_arc(std::ostream& os, const char* cls, Complex from, Complex to,
                    double radius, int sweep, const char* stroke) {
    os << "  <path class=\"" << cls << "\" d=\"M " << svg_pt(from) << " A "
       << format_double(radius) << " " << format_double(radius) << " 0 0 "
       << sweep << " " << svg_pt(to) << "\" stroke=\"" << stroke << "\"/>\n";
}

}  // namespace detail

// Figure of the disk family D(x_k, r) with centers uniform on the diameter,
// the unit circle, optionally the two envelope arcs and the cone through
// z = 1. Pure world-coordinate SVG; output_path is the caller's concern.
inline void render_figure(const RenderConfig& cfg, std::ostream& os) {
    if (!(cfg.r > 0.0 && cfg.r < 1.0))
        throw std::domain_error("render_figure: r must lie in (0,1)");
    if (cfg.n_disks < 1)
        throw std::domain_error("render_figure: need at least one disk");
    if (cfg.width_px < 64)
        throw std::domain_error("render_figure: width must be at least 64 px");

    const EnvelopeSpec env(cfg.r);

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cfg.width_px
       << "\" height=\"" << cfg.width_px
       << "\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n"
       << " <g fill=\"none\" stroke-width=\"0.005\">\n";

    detail::svg_circle(os, "unit-circle", Complex(0.0, 0.0), 1.0, "#202020");

    for (int k = 1; k <= cfg.n_disks; ++k) {
        const double x = -1.0 + 2.0 * static_cast<double>(k) /
                                    (static_cast<double>(cfg.n_disks) + 1.0);
        const EuclideanDisk e = to_euclidean(PseudoDisk(x, cfg.r));
        detail::svg_circle(os, "family", e.center, e.radius, "#7aa6c2");
    }

    if (cfg.show_envelope) {
        const double R = env.circle_upper.radius;
        // upper arc crosses above the axis: clockwise on screen
        detail::svg_arc(os, "envelope", Complex(-1.0, 0.0), Complex(1.0, 0.0), R,
                        1, "#c23b22");
        detail::svg_arc(os, "envelope", Complex(-1.0, 0.0), Complex(1.0, 0.0), R,
                        0, "#c23b22");
    }

    if (cfg.show_cone) {
        const double tan_beta = 2.0 * cfg.r / (1.0 - cfg.r * cfg.r);
        const double reach = 2.2;
        detail::svg_line(os, "cone", Complex(1.0, 0.0),
                         Complex(1.0 - reach, reach * tan_beta), "#4c9141");
        detail::svg_line(os, "cone", Complex(1.0, 0.0),
                         Complex(1.0 - reach, -reach * tan_beta), "#4c9141");
    }

    os << " </g>\n</svg>\n";
}

}  // namespace hypdisk
