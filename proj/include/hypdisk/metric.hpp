#pragma once

#include <cmath>

#include "hypdisk/geom.hpp"
#include "hypdisk/quadrature.hpp"

namespace hypdisk {

// Pseudohyperbolic distance |a - b| / |1 - conj(a) b|, a metric on the unit
// disk with values in [0,1).
inline double pseudo_dist(Complex a, Complex b) {
    require_disk_point(a, "pseudo_dist");
    require_disk_point(b, "pseudo_dist");
    return std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
}

// rho -> log((1+rho)/(1-rho)) = 2 atanh(rho).
inline double pseudo_to_hyp(double rho) {
    if (!(rho >= 0.0) || rho >= 1.0 || !std::isfinite(rho))
        throw std::domain_error("pseudo_to_hyp: rho must lie in [0,1)");
    return 2.0 * std::atanh(rho);
}

// P -> tanh(P/2), inverse of pseudo_to_hyp.
inline double hyp_to_pseudo(double dist) {
    if (!(dist >= 0.0) || !std::isfinite(dist))
        throw std::domain_error("hyp_to_pseudo: distance must be >= 0");
    return std::tanh(0.5 * dist);
}

// Hyperbolic (Poincare) distance of two disk points.
inline double hyp_dist(Complex a, Complex b) {
    return pseudo_to_hyp(pseudo_dist(a, b));
}

// Both readings of one separation; rho = tanh(dist/2) always holds.
struct DistanceValue {
    double rho;   // pseudohyperbolic, in [0,1)
    double dist;  // hyperbolic, >= 0
};

inline DistanceValue distance(Complex a, Complex b) {
    const double rho = pseudo_dist(a, b);
    return DistanceValue{rho, pseudo_to_hyp(rho)};
}

// Hyperbolic length of a polyline: the integral of 2 |dz| / (1 - |z|^2)
// along each segment, by adaptive Gauss-Kronrod quadrature to relative
// tolerance 1e-10. Vertices must keep |v| <= 1 - 1e-9; the integrand is
// singular on the unit circle.
inline double curve_length(const Polyline& gamma) {
    for (Complex v : gamma.points()) {
        if (std::abs(v) > 1.0 - 1e-9)
            throw std::domain_error("curve_length: vertex too close to the unit circle");
    }
    double total = 0.0;
    const auto& pts = gamma.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Complex z0 = pts[i];
        const Complex step = pts[i + 1] - pts[i];
        const double speed = 2.0 * std::abs(step);
        auto density = [z0, step, speed](double t) {
            return speed / (1.0 - std::norm(z0 + t * step));
        };
        total += detail::integrate_adaptive(density, 0.0, 1.0, 1e-10);
    }
    return total;
}

}  // namespace hypdisk
