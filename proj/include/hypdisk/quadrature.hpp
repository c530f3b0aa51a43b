#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hypdisk::detail {

// Gauss 7 / Kronrod 15 pair on [-1,1]. Kronrod nodes with weights; the odd
// entries carry the embedded Gauss weights.
struct GK15 {
    static constexpr int n = 8;  // nodes at +-x, x[0] == 0
    static constexpr double x[n] = {
        0.000000000000000, 0.207784955007898, 0.405845151377397,
        0.586087235467691, 0.741531185599394, 0.864864423359769,
        0.949107912342759, 0.991455371120813};
    static constexpr double wk[n] = {
        0.209482141084728, 0.204432940075298, 0.190350578064785,
        0.169004726639267, 0.140653259715525, 0.104790010322250,
        0.063092092629979, 0.022935322010529};
    static constexpr double wg[n] = {
        0.417959183673469, 0.0, 0.381830050505119, 0.0,
        0.279705391489277, 0.0, 0.129484966168870, 0.0};
};

template <class F>
std::pair<double, double> gk15(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double kron = GK15::wk[0] * f0;
    double gauss = GK15::wg[0] * f0;
    for (int i = 1; i < GK15::n; ++i) {
        const double dx = half * GK15::x[i];
        const double fi = f(mid + dx) + f(mid - dx);
        kron += GK15::wk[i] * fi;
        gauss += GK15::wg[i] * fi;
    }
    kron *= half;
    gauss *= half;
    return {kron, std::abs(kron - gauss)};
}

// Adaptive bisection until the local error estimate drops below
// rel_tol * |subinterval value|. Intended for smooth integrands.
template <class F>
double integrate_adaptive(const F& f, double a, double b, double rel_tol,
                          int depth = 0) {
    auto [value, err] = gk15(f, a, b);
    if (err <= rel_tol * std::abs(value) || err <= 1e-300) return value;
    if (depth >= 48)
        throw std::runtime_error("integrate_adaptive: refinement limit reached");
    const double mid = 0.5 * (a + b);
    return integrate_adaptive(f, a, mid, rel_tol, depth + 1) +
           integrate_adaptive(f, mid, b, rel_tol, depth + 1);
}

}  // namespace hypdisk::detail
