#include "subpoly/montecarlo.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "subpoly/rational.hpp"

namespace subpoly {

McVolume monte_carlo_volume(const std::function<bool(const Vec&)>& inside,
                            const std::vector<std::pair<Rat, Rat>>& box,
                            long long samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("monte_carlo_volume: samples must be >= 1");
    if (box.empty()) throw std::invalid_argument("monte_carlo_volume: empty box");
    Rat box_vol = 1;
    for (const auto& [lo, hi] : box) {
        if (hi < lo) throw std::invalid_argument("monte_carlo_volume: inverted box side");
        box_vol *= hi - lo;
    }

    std::mt19937_64 rng(seed);
    const Rat scale = Rat(1) / Rat(Int(1) << 53);
    int d = static_cast<int>(box.size());
    Vec p(d);
    long long hits = 0;
    for (long long s = 0; s < samples; ++s) {
        for (int j = 0; j < d; ++j) {
            Rat u = Rat(Int(rng() >> 11)) * scale;  // dyadic in [0,1)
            p[j] = box[j].first + (box[j].second - box[j].first) * u;
        }
        if (inside(p)) ++hits;
    }

    McVolume out;
    out.hits = hits;
    out.samples = samples;
    double ratio = static_cast<double>(hits) / static_cast<double>(samples);
    double bv = rat_double(box_vol);
    out.estimate = bv * ratio;
    out.std_error = bv * std::sqrt(ratio * (1.0 - ratio) / static_cast<double>(samples));
    return out;
}

}  // namespace subpoly
