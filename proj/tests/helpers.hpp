#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "highway/model.hpp"
#include "highway/rng.hpp"

namespace highway::testing {

// Distinct dyadic positions (multiples of 2^-scale_bits), so geometric
// identities hold exactly in double arithmetic.
inline PointSet random_dyadic_points(SplitMix64& rng, std::size_t n, int scale_bits = 20) {
    std::vector<std::uint64_t> ticks;
    ticks.reserve(n);
    while (ticks.size() < n) {
        while (ticks.size() < n + n / 4 + 8) ticks.push_back(rng() % (1u << 26) + 1);
        std::sort(ticks.begin(), ticks.end());
        ticks.erase(std::unique(ticks.begin(), ticks.end()), ticks.end());
        if (ticks.size() > n) ticks.resize(n);
    }
    std::vector<double> xs(ticks.size());
    for (std::size_t i = 0; i < ticks.size(); ++i)
        xs[i] = std::ldexp(static_cast<double>(ticks[i]), -scale_bits);
    return PointSet(std::move(xs));
}

// Gap window obeying the frame predicate: first gap uniform in [1,2], each
// later gap uniform in [prev/4, prev/2].
inline std::vector<double> random_frame_window(SplitMix64& rng, int k) {
    std::vector<double> w(static_cast<std::size_t>(k) + 1);
    w[0] = 1.0 + next_unit(rng);
    for (std::size_t i = 1; i < w.size(); ++i)
        w[i] = w[i - 1] / 4 + next_unit(rng) * (w[i - 1] / 2 - w[i - 1] / 4);
    return w;
}

}  // namespace highway::testing
