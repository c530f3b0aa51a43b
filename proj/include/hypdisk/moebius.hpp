#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "hypdisk/geom.hpp"

namespace hypdisk {

// z -> (a z + b) / (c z + d), ad - bc != 0.
//
// Coefficients are rescaled at construction so the largest magnitude is 1;
// transforms that differ by a nonzero scalar act identically, so equality
// is projective (see approx_equal).
struct Moebius {
    Complex a, b, c, d;

    Moebius(Complex a_, Complex b_, Complex c_, Complex d_)
        : a(a_), b(b_), c(c_), d(d_) {
        require_finite(a, "Moebius");
        require_finite(b, "Moebius");
        require_finite(c, "Moebius");
        require_finite(d, "Moebius");
        const double scale = std::max(std::max(std::abs(a), std::abs(b)),
                                      std::max(std::abs(c), std::abs(d)));
        if (!(scale > 0.0))
            throw std::domain_error("Moebius: all coefficients zero");
        a /= scale;
        b /= scale;
        c /= scale;
        d /= scale;
        if (std::abs(det()) <= 1e-12)
            throw std::domain_error("Moebius: degenerate (|ad-bc| <= 1e-12)");
    }

    Complex det() const { return a * d - b * c; }

    Complex operator()(Complex z) const {
        require_finite(z, "Moebius::apply");
        const Complex den = c * z + d;
        if (std::abs(den) <= 1e-14)
            throw pole_error("Moebius::apply: pole", z);
        return (a * z + b) / den;
    }

    Moebius inverse() const { return Moebius(d, -b, -c, a); }

    static Moebius identity() { return Moebius(1.0, 0.0, 0.0, 1.0); }
};

// Matrix product; (m1 * m2)(z) == m1(m2(z)).
inline Moebius operator*(const Moebius& m1, const Moebius& m2) {
    return Moebius(m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                   m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d);
}

inline Moebius compose(const Moebius& m1, const Moebius& m2) { return m1 * m2; }

// Involutive disk automorphism z -> (a - z)/(1 - conj(a) z), swaps a and 0.
inline Moebius blaschke(Complex a) {
    require_disk_point(a, "blaschke");
    return Moebius(-1.0, a, -std::conj(a), 1.0);
}

// z -> (1 + z)/(1 - z); unit disk onto the right half-plane, (-1,1) onto (0,inf).
inline Moebius cayley() { return Moebius(1.0, 1.0, -1.0, 1.0); }

inline Moebius rotation(double theta) {
    return Moebius(std::polar(1.0, theta), 0.0, 0.0, 1.0);
}

// z -> e^{i theta} (a - z)/(1 - conj(a) z); the general disk automorphism.
inline Moebius automorphism(double theta, Complex a) {
    require_disk_point(a, "automorphism");
    const Complex phase = std::polar(1.0, theta);
    return Moebius(-phase, phase * a, -std::conj(a), 1.0);
}

// Projective comparison: m1 == lambda * m2 for some scalar, coefficient-wise
// within tol. The scalar is read off the largest coefficient of m2.
inline bool approx_equal(const Moebius& m1, const Moebius& m2, double tol = 1e-12) {
    const Complex p[4] = {m1.a, m1.b, m1.c, m1.d};
    const Complex q[4] = {m2.a, m2.b, m2.c, m2.d};
    int k = 0;
    for (int i = 1; i < 4; ++i)
        if (std::abs(q[i]) > std::abs(q[k])) k = i;
    const Complex lambda = p[k] / q[k];
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(p[i] - lambda * q[i]));
    return worst <= tol;
}

inline bool is_identity(const Moebius& m, double tol = 1e-12) {
    return approx_equal(m, Moebius::identity(), tol);
}

}  // namespace hypdisk
