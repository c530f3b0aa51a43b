#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "hypdisk/disks.hpp"
#include "hypdisk/geom.hpp"
#include "hypdisk/moebius.hpp"

namespace hypdisk {

// Envelope of the family of pseudohyperbolic disks with fixed radius r and
// centers on the real diameter. The upper boundary of the union is an arc of
//   |w + i (1-r^2)/(2r)| = (1+r^2)/(2r)
// through -1, +1 and i r; the lower boundary is its mirror image. beta is
// the angle at which the arc cuts the real axis: sin(beta) = 2r/(1+r^2),
// tan(beta) = 2r/(1-r^2).
struct EnvelopeSpec {
    double r;
    Circle circle_upper;
    Circle circle_lower;
    double beta;   // aperture half-angle at +-1
    double alpha;  // pi/2 - beta

    explicit EnvelopeSpec(double r_)
        : r(validated(r_)),
          circle_upper(Complex(0.0, -(1.0 - r_ * r_) / (2.0 * r_)),
                       (1.0 + r_ * r_) / (2.0 * r_)),
          circle_lower(Complex(0.0, (1.0 - r_ * r_) / (2.0 * r_)),
                       (1.0 + r_ * r_) / (2.0 * r_)),
          beta(std::asin(2.0 * r_ / (1.0 + r_ * r_))),
          alpha(0.5 * std::numbers::pi - beta) {}

private:
    static double validated(double r_) {
        if (!(r_ > 0.0 && r_ < 1.0))
            throw std::domain_error("EnvelopeSpec: r must lie in (0,1)");
        return r_;
    }
};

inline EnvelopeSpec envelope_spec(double r) { return EnvelopeSpec(r); }

// Stolz-type cone with cusp at z = 1: |Im z| / (1 - Re z) < tan(beta).
inline bool cone_contains(double beta, Complex z) {
    return std::abs(z.imag()) < std::tan(beta) * (1.0 - z.real());
}

// Membership in the union of the disk family, as the open lens between the
// two envelope circles. Boundary points (including +-1) are excluded.
inline bool union_contains(const EnvelopeSpec& env, Complex z) {
    return std::abs(z - env.circle_upper.center) < env.circle_upper.radius &&
           std::abs(z - env.circle_lower.center) < env.circle_lower.radius;
}

inline bool union_contains(double r, Complex z) {
    return union_contains(EnvelopeSpec(r), z);
}

// n points on the upper boundary arc from -1 to +1, uniform in central angle.
inline Polyline boundary_arc(double r, int n) {
    if (n < 2) throw std::domain_error("boundary_arc: need at least two points");
    const EnvelopeSpec env(r);
    const Complex c = env.circle_upper.center;
    const double R = env.circle_upper.radius;
    const double t0 = std::arg(Complex(-1.0, 0.0) - c);
    const double t1 = std::arg(Complex(1.0, 0.0) - c);
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n - 1);
        pts.push_back(c + std::polar(R, t));
    }
    return Polyline(std::move(pts));
}

// Euclidean length of the upper boundary arc: 2 (1+r^2)/r * arctan(r).
inline double boundary_arc_length(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("boundary_arc_length: r must lie in (0,1)");
    return 2.0 * (1.0 + r * r) / r * std::atan(r);
}

// Euclidean area of the union: ((1+r^2)/r)^2 * arctan(r) - (1-r^2)/r.
inline double union_area(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("union_area: r must lie in (0,1)");
    const double q = (1.0 + r * r) / r;
    return q * q * std::atan(r) - (1.0 - r * r) / r;
}

// Tangency construction in the half-plane: the point of the common tangent
// at distance t = (1+a)/(1-a) from the origin is the tangent point of the
// image of exactly one family disk, the one whose image has
//   center = t (1+r^2)/(1-r^2)  (on the real axis),  radius = center * sin(beta).
struct TangentPoint {
    double tangent_dist;  // t, distance along the tangent line
    double foot;          // abscissa of the perpendicular foot = disk center
    double center;        // equals halfplane_image(a, r).center
    double radius;        // equals halfplane_image(a, r).radius
};

inline TangentPoint tangent_point_data(double r, double a) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("tangent_point_data: r must lie in (0,1)");
    if (!(a > -1.0 && a < 1.0))
        throw std::domain_error("tangent_point_data: a must lie in (-1,1)");
    const double t = (1.0 + a) / (1.0 - a);
    const double foot = t * (1.0 + r * r) / (1.0 - r * r);
    return TangentPoint{t, foot, foot, foot * 2.0 * r / (1.0 + r * r)};
}

// Wedge |arg w| < beta in the right half-plane; contains every half-plane
// image of the family and is tangent to each.
inline bool halfplane_wedge_contains(double r, Complex w) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("halfplane_wedge_contains: r must lie in (0,1)");
    if (!(w.real() > 0.0))
        throw std::domain_error("halfplane_wedge_contains: Re w must be positive");
    const double tan_beta = 2.0 * r / (1.0 - r * r);
    return std::abs(w.imag()) < tan_beta * w.real();
}

}  // namespace hypdisk
