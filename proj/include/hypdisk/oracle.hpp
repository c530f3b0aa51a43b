#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hypdisk/disks.hpp"
#include "hypdisk/geom.hpp"
#include "hypdisk/metric.hpp"
#include "hypdisk/moebius.hpp"
#include "hypdisk/sampler.hpp"

namespace hypdisk {

// One verified quantity: computed vs expected under an absolute tolerance.
struct CheckReport {
    std::string name;
    double r;
    double computed;
    double expected;
    double abs_err;
    double tolerance;
    bool pass;
};

inline CheckReport make_report(std::string name, double r, double computed,
                               double expected, double tolerance) {
    const double abs_err = std::abs(computed - expected);
    return CheckReport{std::move(name), r,       computed,
                       expected,        abs_err, tolerance,
                       abs_err <= tolerance};
}

namespace detail {

constexpr int kDiameterGrid = 1024;

// rho(z, x)^2 for real x; kept sqrt-free for the minimization inner loops.
inline double rho_sq_to_real(Complex z, double x) {
    const double dr = z.real() - x;
    const double di = z.imag();
    const double er = 1.0 - x * z.real();
    const double ei = x * z.imag();
    return (dr * dr + di * di) / (er * er + ei * ei);
}

template <class F>
inline std::pair<double, double> golden_min(const F& f, double lo, double hi,
                                            double xtol) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && (hi - lo) > xtol; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace detail

struct DiameterDistance {
    double rho_min;   // min over x in (-1,1) of rho(z, x)
    double nearest_x;
};

// Brute-force distance of z to the real diameter in the pseudohyperbolic
// metric: coarse 1024-point grid, then golden-section refinement around the
// best cell. rho(z, .) tends to 1 at both ends, so the minimum is interior.
inline DiameterDistance distance_to_diameter(Complex z, double tol) {
    require_disk_point(z, "distance_to_diameter");
    if (!(tol > 0.0)) throw std::domain_error("distance_to_diameter: tol must be positive");

    constexpr int n = detail::kDiameterGrid;
    const double h = 2.0 / n;
    double best = std::numeric_limits<double>::infinity();
    double best_x = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = -1.0 + h * (static_cast<double>(i) + 0.5);
        const double g = detail::rho_sq_to_real(z, x);
        if (g < best) {
            best = g;
            best_x = x;
        }
    }
    const double lo = std::max(best_x - h, -1.0 + 1e-12);
    const double hi = std::min(best_x + h, 1.0 - 1e-12);
    auto [x_min, g_min] = detail::golden_min(
        [z](double x) { return detail::rho_sq_to_real(z, x); }, lo, hi,
        std::max(tol * 1e-2, 1e-13));
    return DiameterDistance{std::sqrt(g_min), x_min};
}

namespace detail {

// Membership of z in the family union via the same minimization as
// distance_to_diameter, with an exact early accept (any grid value below r
// settles it) and refinement only inside a safety band around r.
inline bool diameter_min_below(Complex z, double r) {
    constexpr int n = kDiameterGrid;
    const double h = 2.0 / n;
    const double rr = r * r;
    int pivot = static_cast<int>(std::floor((z.real() + 1.0) / h));
    pivot = std::clamp(pivot, 0, n - 1);

    double best = std::numeric_limits<double>::infinity();
    int lo = pivot, hi = pivot + 1;
    while (lo >= 0 || hi < n) {
        if (lo >= 0) {
            const double g = rho_sq_to_real(z, -1.0 + h * (lo + 0.5));
            if (g < rr) return true;
            best = std::min(best, g);
            --lo;
        }
        if (hi < n) {
            const double g = rho_sq_to_real(z, -1.0 + h * (hi + 0.5));
            if (g < rr) return true;
            best = std::min(best, g);
            ++hi;
        }
    }
    if (std::sqrt(best) > r + 0.02) return false;
    return distance_to_diameter(z, 1e-9).rho_min < r;
}

}  // namespace detail

// Numerical upper envelope of the disk family: for each abscissa u, the
// largest semicircle height over an n_x grid of family centers. Envelope
// knowledge-free; serves as the independent check of the closed form.
inline Polyline brute_envelope(double r, int n_u, int n_x) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("brute_envelope: r must lie in (0,1)");
    if (n_u < 16 || n_x < 16)
        throw std::domain_error("brute_envelope: grids must have at least 16 points");

    std::vector<double> center(static_cast<std::size_t>(n_x));
    std::vector<double> rad_sq(static_cast<std::size_t>(n_x));
    for (int i = 0; i < n_x; ++i) {
        const double x = -1.0 + 2.0 * (static_cast<double>(i) + 0.5) / n_x;
        const EuclideanDisk e = to_euclidean(PseudoDisk(x, r));
        center[static_cast<std::size_t>(i)] = e.center.real();
        rad_sq[static_cast<std::size_t>(i)] = e.radius * e.radius;
    }

    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(n_u));
    for (int j = 0; j < n_u; ++j) {
        const double u = -1.0 + 2.0 * (static_cast<double>(j) + 0.5) / n_u;
        double best = 0.0;
        for (int i = 0; i < n_x; ++i) {
            const double dx = u - center[static_cast<std::size_t>(i)];
            best = std::max(best, rad_sq[static_cast<std::size_t>(i)] - dx * dx);
        }
        pts.emplace_back(u, best > 0.0 ? std::sqrt(best) : 0.0);
    }
    return Polyline(std::move(pts));
}

// Deterministic grid estimate of the union's area: cell centers of an n x n
// grid over [-1,1]^2, membership by diameter-distance minimization.
inline double grid_area(double r, int n) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("grid_area: r must lie in (0,1)");
    if (n < 64) throw std::domain_error("grid_area: n must be at least 64");

    const double cell = 2.0 / n;
    long long count = 0;
    for (int j = 0; j < n; ++j) {
        const double y = -1.0 + cell * (static_cast<double>(j) + 0.5);
        for (int i = 0; i < n; ++i) {
            const double x = -1.0 + cell * (static_cast<double>(i) + 0.5);
            const Complex z(x, y);
            if (std::norm(z) >= 1.0) continue;
            if (detail::diameter_min_below(z, r)) ++count;
        }
    }
    return static_cast<double>(count) * cell * cell;
}

// Euclidean length of a polyline.
inline double polyline_length(const Polyline& p) {
    double total = 0.0;
    const auto& pts = p.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        total += std::abs(pts[i + 1] - pts[i]);
    return total;
}

// Contraction property suite: holomorphic self-maps of the disk never expand
// the pseudohyperbolic distance, with equality exactly for automorphisms.
// Test maps rotate through Blaschke products (degree 2..4, roots within
// 0.8), scalings c z, and automorphisms; one report per case.
inline std::vector<CheckReport> schwarz_pick_suite(SeededSampler sampler,
                                                   int n_cases) {
    if (n_cases < 1)
        throw std::domain_error("schwarz_pick_suite: n_cases must be >= 1");

    std::vector<CheckReport> reports;
    reports.reserve(static_cast<std::size_t>(n_cases));
    for (int k = 0; k < n_cases; ++k) {
        const Complex z = sampler.next_disk(0.9);
        const Complex w = sampler.next_disk(0.9);
        const double rhs = pseudo_dist(z, w);
        const int kind = k % 3;
        if (kind == 0) {
            const int degree = 2 + (k / 3) % 3;
            Complex fz = 1.0, fw = 1.0;
            for (int j = 0; j < degree; ++j) {
                const Complex root = sampler.next_disk(0.8);
                fz *= (root - z) / (1.0 - std::conj(root) * z);
                fw *= (root - w) / (1.0 - std::conj(root) * w);
            }
            const double lhs = pseudo_dist(fz, fw);
            CheckReport rep = make_report(
                "schwarz_pick/blaschke_deg" + std::to_string(degree), 0.0, lhs,
                rhs, 1e-12);
            rep.abs_err = std::max(0.0, lhs - rhs);  // one-sided: contraction
            rep.pass = rep.abs_err <= rep.tolerance;
            reports.push_back(std::move(rep));
        } else if (kind == 1) {
            const Complex scale = sampler.next_disk(0.95);
            const double lhs = pseudo_dist(scale * z, scale * w);
            CheckReport rep =
                make_report("schwarz_pick/scale", 0.0, lhs, rhs, 1e-12);
            rep.abs_err = std::max(0.0, lhs - rhs);
            rep.pass = rep.abs_err <= rep.tolerance;
            reports.push_back(std::move(rep));
        } else {
            const double theta = sampler.next_range(0.0, 2.0 * std::numbers::pi);
            const Moebius f = automorphism(theta, sampler.next_disk(0.9));
            const double lhs = pseudo_dist(f(z), f(w));
            reports.push_back(
                make_report("schwarz_pick/automorphism", 0.0, lhs, rhs, 1e-12));
        }
    }
    return reports;
}

}  // namespace hypdisk
