#pragma once

// Straight-line evaluator of the basis-sum schedule, written independently
// of the library and kept deliberately naive: raw sinusoid, explicit
// min-max normalization, direct weighted sum. Used as the ground truth the
// production sampler is checked against.

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

struct Basis {
    double weight;
    double frequency;
    double amplitude;
    int offset;
};

inline std::vector<double> schedule(int frames, double magnitude,
                                    const std::vector<Basis>& bases) {
    const double pi = std::acos(-1.0);
    std::vector<double> combined(static_cast<std::size_t>(frames), 0.0);
    for (const Basis& basis : bases) {
        std::vector<double> raw;
        raw.reserve(static_cast<std::size_t>(frames));
        for (int t = 0; t < frames; ++t) {
            const int k = basis.offset + 1 + t;
            const double denom = frames > 1 ? frames - 1.0 : 1.0;
            raw.push_back(std::sin(2.0 * basis.frequency * pi * k / denom));
        }
        const double mn = *std::min_element(raw.begin(), raw.end());
        const double mx = *std::max_element(raw.begin(), raw.end());
        const double lo = magnitude - magnitude * basis.amplitude;
        const double hi = magnitude + magnitude * basis.amplitude;
        for (int t = 0; t < frames; ++t) {
            double normed = magnitude;
            if (mx > mn) {
                normed = lo + (raw[static_cast<std::size_t>(t)] - mn) * (hi - lo) / (mx - mn);
            }
            combined[static_cast<std::size_t>(t)] += basis.weight * normed;
        }
    }
    return combined;
}

}  // namespace oracle
