#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypdisk {

using Complex = std::complex<double>;

// Thrown when a Moebius transform is evaluated at (or numerically at) the
// zero of its denominator. Carries the offending point.
class pole_error : public std::runtime_error {
public:
    pole_error(const std::string& what, Complex at)
        : std::runtime_error(what), at_(at) {}
    Complex at() const { return at_; }

private:
    Complex at_;
};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// |z| < 1, finite coordinates.
inline bool in_unit_disk(Complex z) {
    return is_finite(z) && std::norm(z) < 1.0;
}

inline void require_finite(Complex z, const char* who) {
    if (!is_finite(z))
        throw std::domain_error(std::string(who) + ": non-finite point");
}

inline void require_disk_point(Complex z, const char* who) {
    require_finite(z, who);
    if (std::norm(z) >= 1.0)
        throw std::domain_error(std::string(who) + ": point not in the open unit disk");
}

// Boundary circle of a Euclidean disk, or a free-standing curve.
struct Circle {
    Complex center;
    double radius;

    Circle(Complex c, double r) : center(c), radius(r) {
        require_finite(c, "Circle");
        if (!(r > 0.0) || !std::isfinite(r))
            throw std::domain_error("Circle: radius must be positive and finite");
    }
};

// Ordered vertex chain, at least two points, consecutive vertices distinct.
class Polyline {
public:
    explicit Polyline(std::vector<Complex> pts) : pts_(std::move(pts)) {
        if (pts_.size() < 2)
            throw std::domain_error("Polyline: needs at least two points");
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            require_finite(pts_[i], "Polyline");
            if (i > 0 && pts_[i] == pts_[i - 1])
                throw std::domain_error("Polyline: consecutive points must be distinct");
        }
    }

    const std::vector<Complex>& points() const& { return pts_; }
    std::vector<Complex> points() && { return std::move(pts_); }
    std::size_t size() const { return pts_.size(); }
    Complex operator[](std::size_t i) const { return pts_[i]; }

private:
    std::vector<Complex> pts_;
};

}  // namespace hypdisk
