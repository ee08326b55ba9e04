#include "highway/generators.hpp"

#include <algorithm>

namespace highway {

namespace {

bool strictly_increasing(const std::vector<double>& xs) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i - 1] < xs[i])) return false;
    return true;
}

}  // namespace

PointSet uniform_points(std::size_t n, Seed seed, std::uint64_t trial) {
    auto rng = make_stream(seed, "uniform_points", n, trial);
    std::vector<double> xs(n);
    for (;;) {
        for (auto& x : xs) x = next_unit(rng);
        std::sort(xs.begin(), xs.end());
        if (strictly_increasing(xs)) break;
    }
    return PointSet(std::move(xs));
}

GapSequence exponential_gaps(std::size_t count, Seed seed, std::uint64_t trial) {
    auto rng = make_stream(seed, "exponential_gaps", count, trial);
    std::vector<double> gs(count);
    for (auto& g : gs) g = next_exponential(rng);
    return GapSequence(0.0, std::move(gs));
}

PointSet uniform_via_exponentials(std::size_t n, Seed seed, std::uint64_t trial) {
    if (n < 1) throw std::invalid_argument("uniform_via_exponentials: need n >= 1");
    auto rng = make_stream(seed, "uniform_via_exponentials", n, trial);
    std::vector<double> xs(n);
    for (;;) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += next_exponential(rng);
            xs[i] = acc;
        }
        acc += next_exponential(rng);
        for (auto& x : xs) x /= acc;
        // Division can collapse adjacent values or touch the ends of (0,1)
        // in principle; redraw rather than return an invalid set.
        if (xs.front() > 0.0 && xs.back() < 1.0 && strictly_increasing(xs)) break;
    }
    return PointSet(std::move(xs));
}

PointSet equally_spaced(std::size_t n) {
    if (n < 1) throw std::invalid_argument("equally_spaced: need n >= 1");
    std::vector<double> xs(n);
    const double denom = static_cast<double>(n + 1);
    for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<double>(i + 1) / denom;
    return PointSet(std::move(xs));
}

}  // namespace highway
