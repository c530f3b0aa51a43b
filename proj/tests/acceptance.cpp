// Acceptance suite: every closed form of the toolkit checked against its
// independent numerical oracle at a fixed tolerance, one line per criterion.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "hypdisk/hypdisk.hpp"

namespace {

using clock_type = std::chrono::steady_clock;
using namespace hypdisk;

int g_failures = 0;
clock_type::time_point g_start;

void begin() { g_start = clock_type::now(); }

double elapsed() {
    return std::chrono::duration<double>(clock_type::now() - g_start).count();
}

void report(int index, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] %2d. %s: %s (%.2fs)\n", ok ? "PASS" : "FAIL", index, name,
                detail.c_str(), elapsed());
    if (!ok) ++g_failures;
}

std::string err_vs_tol(double err, double tol) {
    return "max_err=" + format_double(err, 3) + " tol=" + format_double(tol, 3);
}

// 1. Each family disk is internally tangent to the envelope circle.
void criterion_tangency() {
    begin();
    const double tol = 1e-12;
    double worst = 0.0;
    for (int ri = 1; ri <= 9; ++ri) {
        const double r = 0.1 * static_cast<double>(ri);
        const EnvelopeSpec env(r);
        for (int i = 0; i < 50; ++i) {
            const double x = -0.99 + 1.98 * (static_cast<double>(i) + 0.5) / 50.0;
            const EuclideanDisk e = to_euclidean(PseudoDisk(x, r));
            const double reach = std::abs(e.center - env.circle_upper.center) + e.radius;
            worst = std::max(worst, std::abs(reach - env.circle_upper.radius));
        }
    }
    report(1, "internal tangency of the disk family",
           worst <= tol && elapsed() < 1.0, err_vs_tol(worst, tol));
}

// 2. Brute-force envelope vertices lie on the closed-form circle.
void criterion_brute_envelope() {
    begin();
    const double tol = 1e-3;
    double worst = 0.0;
    for (double r : {0.2, 0.5, 0.8}) {
        const EnvelopeSpec env(r);
        const Polyline vertices = brute_envelope(r, 4096, 4096);
        for (Complex z : vertices.points()) {
            const double dist = std::abs(z - env.circle_upper.center);
            worst = std::max(worst, std::abs(dist - env.circle_upper.radius));
        }
    }
    report(2, "brute-force envelope agreement",
           worst <= tol && elapsed() < 30.0, err_vs_tol(worst, tol));
}

// 3. Common tangent ratio in the half-plane; tangency data reproduces the
//    half-plane disks.
void criterion_common_tangent() {
    begin();
    SeededSampler sampler(42, 3);
    double worst_ratio = 0.0, worst_repro = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double x = sampler.next_range(-0.95, 0.95);
        const double r = sampler.next_range(0.05, 0.95);
        const HalfplaneDisk k = halfplane_image(x, r);
        worst_ratio = std::max(
            worst_ratio, std::abs(k.radius / k.center - 2.0 * r / (1.0 + r * r)));
        const TangentPoint tp = tangent_point_data(r, x);
        worst_repro = std::max(worst_repro, std::abs(tp.center - k.center));
        worst_repro = std::max(worst_repro, std::abs(tp.radius - k.radius));
    }
    const bool ok = worst_ratio <= 1e-13 && worst_repro <= 1e-12;
    report(3, "common tangent in the half-plane", ok,
           "ratio_err=" + format_double(worst_ratio, 3) +
               " (tol 1e-13), repro_err=" + format_double(worst_repro, 3) +
               " (tol 1e-12)");
}

// 4. Polyline length of the sampled boundary arc matches the closed form.
void criterion_arc_length() {
    begin();
    const double tol = 1e-6;
    double worst = 0.0;
    for (double r : {0.2, 0.5, 0.8}) {
        const double poly = polyline_length(boundary_arc(r, 20000));
        worst = std::max(worst, std::abs(poly - boundary_arc_length(r)));
    }
    report(4, "boundary arc length", worst <= tol && elapsed() < 1.0,
           err_vs_tol(worst, tol));
}

// 5. Grid-counted area matches the closed form.
void criterion_area() {
    begin();
    const double tol = 5e-3;
    double worst = 0.0;
    for (double r : {0.3, 0.5, 0.7}) {
        worst = std::max(worst, std::abs(grid_area(r, 2000) - union_area(r)));
    }
    report(5, "union area", worst <= tol && elapsed() < 60.0,
           err_vs_tol(worst, tol));
}

// 6. Schwarz-Pick: no contraction violation, automorphisms are isometries.
void criterion_schwarz_pick() {
    begin();
    const auto reports = schwarz_pick_suite(SeededSampler(42, 6), 1000);
    double worst = 0.0;
    bool all_pass = true;
    for (const CheckReport& rep : reports) {
        worst = std::max(worst, rep.abs_err);
        all_pass = all_pass && rep.pass;
    }
    report(6, "schwarz-pick suite (1000 cases)", all_pass,
           err_vs_tol(worst, 1e-12));
}

// 7. Metric identities: conversions, the cosh formula, the segment integral.
void criterion_metric_identities() {
    begin();
    SeededSampler sampler(42, 7);
    double worst_roundtrip = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double rho = sampler.next_range(0.0, 0.999);
        worst_roundtrip = std::max(worst_roundtrip,
                                   std::abs(hyp_to_pseudo(pseudo_to_hyp(rho)) - rho));
    }
    double worst_cosh = 0.0;
    for (int i = 0; i < 500; ++i) {
        const Complex a = sampler.next_disk(0.9);
        const Complex b = sampler.next_disk(0.9);
        const double lhs =
            std::norm(a - b) / ((1.0 - std::norm(a)) * (1.0 - std::norm(b)));
        const double rhs = 0.5 * (std::cosh(hyp_dist(a, b)) - 1.0);
        worst_cosh = std::max(worst_cosh, std::abs(lhs - rhs) /
                                              std::max({lhs, rhs, 1e-30}));
    }
    const double seg_err = std::abs(
        curve_length(Polyline({Complex(0, 0), Complex(0.5, 0)})) -
        1.0986122886681098);
    const bool ok = worst_roundtrip <= 1e-14 && worst_cosh <= 1e-11 &&
                    seg_err <= 1e-10;
    report(7, "metric identities", ok,
           "roundtrip=" + format_double(worst_roundtrip, 3) +
               " (tol 1e-14), cosh_rel=" + format_double(worst_cosh, 3) +
               " (tol 1e-11), log3_err=" + format_double(seg_err, 3) +
               " (tol 1e-10)");
}

// 8. Disk conversion roundtrip and extreme-distance consistency.
void criterion_disk_roundtrip() {
    begin();
    SeededSampler sampler(42, 8);
    double worst_roundtrip = 0.0, worst_extremes = 0.0;
    for (int i = 0; i < 200; ++i) {
        const PseudoDisk d(sampler.next_disk(0.95), sampler.next_range(0.05, 0.95));
        const EuclideanDisk e = to_euclidean(d);
        const PseudoDisk back = from_euclidean(e);
        worst_roundtrip =
            std::max(worst_roundtrip, std::max(std::abs(back.center - d.center),
                                               std::abs(back.radius - d.radius)));
        const ExtremeDistances ex = extreme_distances(d);
        worst_extremes = std::max(
            worst_extremes, std::abs(ex.max_dist - (std::abs(e.center) + e.radius)));
        if (!ex.origin_inside) {
            worst_extremes = std::max(
                worst_extremes,
                std::abs(ex.min_dist - (std::abs(e.center) - e.radius)));
        }
    }
    const bool ok = worst_roundtrip <= 1e-11 && worst_extremes <= 1e-12;
    report(8, "disk conversion roundtrip", ok,
           "roundtrip=" + format_double(worst_roundtrip, 3) +
               " (tol 1e-11), extremes=" + format_double(worst_extremes, 3) +
               " (tol 1e-12)");
}

// 9. Lens membership agrees with the minimization oracle off a 1e-6 band.
void criterion_union_oracle() {
    begin();
    SeededSampler sampler(42, 9);
    bool agree = true;
    int checked = 0;
    for (double r : {0.3, 0.6}) {
        const EnvelopeSpec env(r);
        for (int i = 0; i < 2000; ++i) {
            const Complex z = sampler.next_disk(0.995);
            const double rho_min = distance_to_diameter(z, 1e-9).rho_min;
            if (std::abs(rho_min - r) <= 1e-6) continue;
            ++checked;
            agree = agree && (union_contains(env, z) == (rho_min < r));
        }
    }
    report(9, "union membership oracle equivalence", agree && checked >= 3500,
           "agreed on " + std::to_string(checked) + " points");
}

// 10. Hyperbolic length along sampled geodesics equals the distance.
void criterion_geodesic_length() {
    begin();
    SeededSampler sampler(42, 10);
    const double tol = 1e-6;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Complex a = sampler.next_disk(0.9);
        const Complex b = sampler.next_disk(0.9);
        if (a == b) continue;
        const Polyline path = sample(geodesic_arc(a, b), 10000);
        worst = std::max(worst, std::abs(curve_length(path) - hyp_dist(a, b)));
    }
    report(10, "geodesic length realizes the distance", worst <= tol,
           err_vs_tol(worst, tol));
}

}  // namespace

int main() {
    criterion_tangency();
    criterion_brute_envelope();
    criterion_common_tangent();
    criterion_arc_length();
    criterion_area();
    criterion_schwarz_pick();
    criterion_metric_identities();
    criterion_disk_roundtrip();
    criterion_union_oracle();
    criterion_geodesic_length();

    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 10 acceptance criteria passed\n");
    return 0;
}
