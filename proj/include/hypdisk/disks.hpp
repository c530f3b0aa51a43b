#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "hypdisk/geom.hpp"
#include "hypdisk/metric.hpp"

namespace hypdisk {

// Pseudohyperbolic disk: all z with pseudo_dist(z, center) < radius.
struct PseudoDisk {
    Complex center;
    double radius;

    PseudoDisk(Complex a, double r) : center(a), radius(r) {
        require_disk_point(a, "PseudoDisk");
        if (!(r > 0.0 && r < 1.0))
            throw std::domain_error("PseudoDisk: radius must lie in (0,1)");
    }
};

struct EuclideanDisk {
    Complex center;
    double radius;

    EuclideanDisk(Complex p, double R) : center(p), radius(R) {
        require_finite(p, "EuclideanDisk");
        if (!(R > 0.0) || !std::isfinite(R))
            throw std::domain_error("EuclideanDisk: radius must be positive");
    }
};

// Image of a real-centered pseudohyperbolic disk in the right half-plane:
// a disk orthogonal to the positive real axis, cut at axis_min < axis_max.
struct HalfplaneDisk {
    double center;    // midpoint of the two axis cuts
    double radius;    // half their separation
    double axis_min;
    double axis_max;
};

// Hyperbolic geodesic through two points: a diameter chord when the points
// are collinear with the origin, otherwise the arc of the circle through
// both that meets the unit circle at right angles.
struct GeodesicArc {
    Complex from;
    Complex to;
    std::optional<Circle> circle;  // empty for the diameter case

    bool is_diameter() const { return !circle.has_value(); }
};

// A pseudohyperbolic disk is a Euclidean disk:
//   p = (1-r^2) a / (1 - r^2 |a|^2),   R = (1-|a|^2) r / (1 - r^2 |a|^2).
inline EuclideanDisk to_euclidean(const PseudoDisk& d) {
    const double r2 = d.radius * d.radius;
    const double den = 1.0 - r2 * std::norm(d.center);
    const Complex p = (1.0 - r2) / den * d.center;
    const double R = (1.0 - std::norm(d.center)) / den * d.radius;
    return EuclideanDisk(p, R);
}

// Inverse of to_euclidean. With m = |a|, the signed extreme distances to the
// origin give
//   (m - r)/(1 - r m) = |p| - R,   (m + r)/(1 + r m) = |p| + R,
// and eliminating m leaves a quadratic in s = r m whose root below 1 is
// taken in a cancellation-free form.
inline PseudoDisk from_euclidean(const EuclideanDisk& e) {
    require_finite(e.center, "from_euclidean");
    const double dist = std::abs(e.center);
    if (!(dist + e.radius < 1.0))
        throw std::domain_error("from_euclidean: disk closure must lie inside the unit disk");
    if (dist == 0.0) return PseudoDisk(0.0, e.radius);

    const double sum = 2.0 * dist;       // (|p|+R) + (|p|-R)
    const double diff = 2.0 * e.radius;  // (|p|+R) - (|p|-R)
    const double s2 = sum * sum, d2 = diff * diff;
    const double disc = (4.0 - (sum - diff) * (sum - diff)) *
                        (4.0 - (sum + diff) * (sum + diff));
    const double s = 2.0 * sum * diff / ((4.0 - s2 - d2) + std::sqrt(disc));
    const double m = 0.5 * (sum + s * diff);
    const double r = 0.5 * (diff + s * sum);
    return PseudoDisk(m / dist * e.center, r);
}

struct ExtremeDistances {
    double min_dist;      // 0 when the origin lies in the closed disk
    double max_dist;
    bool origin_inside;   // |center| <= radius
};

// Largest and (when the origin is outside) smallest distance of a point of
// the disk to the origin:
//   d_max = (|a|+r)/(1+r|a|),   d_min = (|a|-r)/(1-r|a|) for |a| > r.
inline ExtremeDistances extreme_distances(const PseudoDisk& d) {
    const double m = std::abs(d.center);
    const double r = d.radius;
    ExtremeDistances out;
    out.max_dist = (m + r) / (1.0 + r * m);
    out.origin_inside = m <= r;
    out.min_dist = out.origin_inside ? 0.0 : (m - r) / (1.0 - r * m);
    return out;
}

// Image of the disk about x under z -> (1+z)/(1-z). Cuts the positive real
// axis at
//   axis_min = (1-r)/(1+r) * (1+x)/(1-x),  axis_max = (1+r)/(1-r) * (1+x)/(1-x);
// center and radius are their mean and half-difference.
inline HalfplaneDisk halfplane_image(double x, double r) {
    if (!(x > -1.0 && x < 1.0) || !std::isfinite(x))
        throw std::domain_error("halfplane_image: x must lie in (-1,1)");
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("halfplane_image: r must lie in (0,1)");
    const double ray = (1.0 + x) / (1.0 - x);
    const double lo = (1.0 - r) / (1.0 + r) * ray;
    const double hi = (1.0 + r) / (1.0 - r) * ray;
    return HalfplaneDisk{0.5 * (hi + lo), 0.5 * (hi - lo), lo, hi};
}

struct DiameterEndpoints {
    double lower;  // (x-r)/(1-xr)
    double upper;  // (x+r)/(1+xr)
};

// Intersections of the disk boundary with the real diameter.
inline DiameterEndpoints diameter_endpoints(double x, double r) {
    if (!(x > -1.0 && x < 1.0) || !std::isfinite(x))
        throw std::domain_error("diameter_endpoints: x must lie in (-1,1)");
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("diameter_endpoints: r must lie in (0,1)");
    return DiameterEndpoints{(x - r) / (1.0 - x * r), (x + r) / (1.0 + x * r)};
}

// Geodesic between two distinct disk points. The circular case solves
//   2 Re(conj(c) a) = |a|^2 + 1,   2 Re(conj(c) b) = |b|^2 + 1
// for the center c; orthogonality to the unit circle is |c|^2 = radius^2 + 1.
inline GeodesicArc geodesic_arc(Complex a, Complex b) {
    require_disk_point(a, "geodesic_arc");
    require_disk_point(b, "geodesic_arc");
    if (a == b)
        throw std::domain_error("geodesic_arc: degenerate input, points coincide");

    const double cross = std::imag(std::conj(a) * b);
    if (std::abs(cross) <= 1e-14 * (1.0 + std::abs(a) * std::abs(b)))
        return GeodesicArc{a, b, std::nullopt};

    const double ka = 0.5 * (std::norm(a) + 1.0);
    const double kb = 0.5 * (std::norm(b) + 1.0);
    // [ a.re  a.im ] [ c.re ]   [ ka ]
    // [ b.re  b.im ] [ c.im ] = [ kb ]
    const double det = a.real() * b.imag() - a.imag() * b.real();  // == -cross
    const Complex c((ka * b.imag() - kb * a.imag()) / det,
                    (kb * a.real() - ka * b.real()) / det);
    const double radius = std::sqrt(std::norm(c) - 1.0);
    return GeodesicArc{a, b, Circle(c, radius)};
}

// n >= 2 points along the arc from `from` to `to`, endpoints included. The
// circular case sweeps the short way, which is the sub-arc inside the disk.
inline Polyline sample(const GeodesicArc& arc, int n) {
    if (n < 2) throw std::domain_error("sample: need at least two points");
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(n));
    if (arc.is_diameter()) {
        const Complex step = (arc.to - arc.from) / static_cast<double>(n - 1);
        for (int i = 0; i < n; ++i)
            pts.push_back(i == n - 1 ? arc.to : arc.from + static_cast<double>(i) * step);
    } else {
        const Complex c = arc.circle->center;
        const double R = arc.circle->radius;
        const double t0 = std::arg(arc.from - c);
        const double sweep =
            std::remainder(std::arg(arc.to - c) - t0, 2.0 * std::numbers::pi);
        for (int i = 0; i < n; ++i) {
            if (i == 0) { pts.push_back(arc.from); continue; }
            if (i == n - 1) { pts.push_back(arc.to); continue; }
            const double t = t0 + sweep * static_cast<double>(i) / static_cast<double>(n - 1);
            pts.push_back(c + std::polar(R, t));
        }
    }
    return Polyline(std::move(pts));
}

}  // namespace hypdisk
