#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "subpoly/linalg.hpp"

namespace subpoly {

struct McVolume {
    double estimate = 0.0;
    double std_error = 0.0;
    long long hits = 0;
    long long samples = 0;
};

// Hit-ratio volume estimate over an axis-aligned box. Sample coordinates are
// dyadic rationals, so the oracle sees exact points and runs are reproducible
// for a fixed seed.
McVolume monte_carlo_volume(const std::function<bool(const Vec&)>& inside,
                            const std::vector<std::pair<Rat, Rat>>& box,
                            long long samples, std::uint64_t seed);

}  // namespace subpoly
