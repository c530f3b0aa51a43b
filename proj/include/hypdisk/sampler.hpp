#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "hypdisk/geom.hpp"

namespace hypdisk {

// Counter-based splittable generator. Draw i of stream s under seed q is the
// pure function
//     mix(mix(q ^ mix(s * GAMMA)) + (i+1) * GAMMA)
// with GAMMA = 0x9E3779B97F4A7C15 and mix the splitmix64 finalizer, so
// identical (seed, stream) pairs reproduce identical sample sequences and
// streams are independent of the draw order in sibling streams.
class SeededSampler {
public:
    explicit SeededSampler(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream), base_(mix(seed ^ mix(stream * kGamma))) {}

    SeededSampler split(std::uint64_t stream) const {
        return SeededSampler(seed_, stream);
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return mix(base_ + (++counter_) * kGamma); }

    // uniform in [0, 1)
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double next_range(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

    // uniform on the disk |z| < max_radius
    Complex next_disk(double max_radius = 1.0) {
        const double u = next_unit();
        const double v = next_unit();
        return std::polar(max_radius * std::sqrt(u), 2.0 * std::numbers::pi * v);
    }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

}  // namespace hypdisk
