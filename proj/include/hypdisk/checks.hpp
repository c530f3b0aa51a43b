#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "hypdisk/disks.hpp"
#include "hypdisk/envelope.hpp"
#include "hypdisk/metric.hpp"
#include "hypdisk/oracle.hpp"
#include "hypdisk/sampler.hpp"

namespace hypdisk {

// Full verification battery for one family radius: every closed form checked
// against its independent numerical oracle, plus the metric and conversion
// identities. Deterministic for a fixed (r, seed).
inline std::vector<CheckReport> run_check_battery(double r, std::uint64_t seed) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("run_check_battery: r must lie in (0,1)");

    const EnvelopeSpec env(r);
    const std::uint64_t stream = std::bit_cast<std::uint64_t>(r);
    std::vector<CheckReport> out;

    {  // every family disk internally tangent to the envelope circle
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double x = -0.99 + 1.98 * (static_cast<double>(i) + 0.5) / 50.0;
            const EuclideanDisk e = to_euclidean(PseudoDisk(x, r));
            const double reach =
                std::abs(e.center - env.circle_upper.center) + e.radius;
            worst = std::max(worst, std::abs(reach - env.circle_upper.radius));
        }
        out.push_back(make_report("tangency_max_abs_err", r, worst, 0.0, 1e-12));
    }

    {  // brute-force envelope vs the closed-form circle
        const Polyline env_pts = brute_envelope(r, 4096, 4096);
        double worst = 0.0;
        for (Complex z : env_pts.points()) {
            const double dist = std::abs(z - env.circle_upper.center);
            worst = std::max(worst, std::abs(dist - env.circle_upper.radius));
        }
        out.push_back(make_report("envelope_max_deviation", r, worst, 0.0, 1e-3));
    }

    out.push_back(make_report("arc_length_polyline", r,
                              polyline_length(boundary_arc(r, 20000)),
                              boundary_arc_length(r), 1e-6));

    out.push_back(make_report("area_grid", r, grid_area(r, 2000), union_area(r),
                              5e-3));

    {  // Schwarz-Pick: worst contraction violation / automorphism mismatch
        const auto reports =
            schwarz_pick_suite(SeededSampler(seed, stream ^ 1), 500);
        double worst_violation = 0.0, worst_equality = 0.0;
        for (const CheckReport& rep : reports) {
            if (rep.name == "schwarz_pick/automorphism")
                worst_equality = std::max(worst_equality, rep.abs_err);
            else
                worst_violation = std::max(worst_violation, rep.abs_err);
        }
        out.push_back(make_report("schwarz_pick_max_violation", r,
                                  worst_violation, 0.0, 1e-12));
        out.push_back(make_report("schwarz_pick_automorphism_max_err", r,
                                  worst_equality, 0.0, 1e-12));
    }

    {  // Euclidean <-> pseudohyperbolic disk conversions
        SeededSampler sampler(seed, stream ^ 2);
        double worst_roundtrip = 0.0, worst_extremes = 0.0;
        for (int i = 0; i < 200; ++i) {
            const PseudoDisk d(sampler.next_disk(0.95),
                               sampler.next_range(0.05, 0.95));
            const EuclideanDisk e = to_euclidean(d);
            const PseudoDisk back = from_euclidean(e);
            worst_roundtrip = std::max(
                worst_roundtrip, std::max(std::abs(back.center - d.center),
                                          std::abs(back.radius - d.radius)));
            const ExtremeDistances ex = extreme_distances(d);
            worst_extremes = std::max(
                worst_extremes,
                std::abs(ex.max_dist - (std::abs(e.center) + e.radius)));
            if (!ex.origin_inside)
                worst_extremes = std::max(
                    worst_extremes,
                    std::abs(ex.min_dist - (std::abs(e.center) - e.radius)));
        }
        out.push_back(make_report("disk_roundtrip_max_err", r, worst_roundtrip,
                                  0.0, 1e-11));
        out.push_back(make_report("extreme_dist_consistency_max_err", r,
                                  worst_extremes, 0.0, 1e-12));
    }

    {  // metric identities
        SeededSampler sampler(seed, stream ^ 3);
        double worst_roundtrip = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double rho = sampler.next_range(0.0, 0.999);
            worst_roundtrip = std::max(
                worst_roundtrip, std::abs(hyp_to_pseudo(pseudo_to_hyp(rho)) - rho));
        }
        out.push_back(make_report("rho_dist_roundtrip_max_err", r,
                                  worst_roundtrip, 0.0, 1e-14));

        double worst_rel = 0.0;
        for (int i = 0; i < 500; ++i) {
            const Complex a = sampler.next_disk(0.9);
            const Complex b = sampler.next_disk(0.9);
            const double lhs =
                std::norm(a - b) / ((1.0 - std::norm(a)) * (1.0 - std::norm(b)));
            const double rhs = 0.5 * (std::cosh(hyp_dist(a, b)) - 1.0);
            const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
            worst_rel = std::max(worst_rel, std::abs(lhs - rhs) / scale);
        }
        out.push_back(
            make_report("cosh_identity_max_rel_err", r, worst_rel, 0.0, 1e-11));
    }

    return out;
}

}  // namespace hypdisk
