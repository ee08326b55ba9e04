#include "highway/frames.hpp"

#include <cmath>

#include "highway/interference.hpp"
#include "highway/stats.hpp"

namespace highway {

bool is_frame(std::span<const double> window) {
    if (window.empty()) throw std::invalid_argument("is_frame: window must not be empty");
    if (!(1.0 <= window[0] && window[0] <= 2.0)) return false;
    for (std::size_t i = 1; i < window.size(); ++i)
        if (!(window[i - 1] / 4 <= window[i] && window[i] <= window[i - 1] / 2)) return false;
    return true;
}

FrameReport scan_frames(const GapSequence& g, int k, ScanMode mode) {
    if (k < 1) throw std::invalid_argument("scan_frames: frame order must be >= 1");
    const std::size_t window = static_cast<std::size_t>(k) + 1;
    const auto& gs = g.gaps();
    if (gs.size() < window)
        throw std::invalid_argument("scan_frames: gap sequence shorter than the frame window");
    FrameReport report;
    report.k = k;
    report.mode = mode;
    report.probability_bound = frame_probability_bound(k);
    const std::size_t stride =
        mode == ScanMode::disjoint_blocks ? static_cast<std::size_t>(k) : 1;
    for (std::size_t start = 0; start + window <= gs.size(); start += stride)
        if (is_frame(std::span<const double>(gs).subspan(start, window)))
            report.starts.push_back(start);
    return report;
}

std::int64_t frame_interference_witness(const GapSequence& g, std::size_t start, int k) {
    if (k < 1) throw std::invalid_argument("frame witness: frame order must be >= 1");
    const std::size_t window = static_cast<std::size_t>(k) + 1;
    if (start + window > g.size())
        throw std::invalid_argument("frame witness: window exceeds the gap sequence");
    if (!is_frame(std::span<const double>(g.gaps()).subspan(start, window)))
        throw std::invalid_argument("frame witness: window is not a k-frame");
    // Build the points with the anchor included as a node; the frame nodes
    // then always have a left neighbor, so each of the k of them covers the
    // node that closes the window.
    std::vector<double> xs;
    xs.reserve(g.size() + 1);
    double acc = g.anchor();
    xs.push_back(acc);
    for (const double gap : g.gaps()) {
        acc += gap;
        xs.push_back(acc);
    }
    const auto profile = interference_fast(PointSet(std::move(xs)));
    return profile.counts[start + window];
}

double frame_probability_bound(int k) {
    if (k < 0) throw std::invalid_argument("frame_probability_bound: k must be >= 0");
    const int e = (k + 2) * (k + 2);
    return std::ldexp(1.0, -e);
}

FrameProbabilityEstimate estimate_frame_probability(int k, std::uint64_t trials, Seed seed) {
    if (k < 0) throw std::invalid_argument("estimate_frame_probability: k must be >= 0");
    if (trials < 1) throw std::invalid_argument("estimate_frame_probability: need trials >= 1");
    std::vector<double> window(static_cast<std::size_t>(k) + 1);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto rng = make_stream(seed, "frame_probability", static_cast<std::uint64_t>(k), t);
        for (auto& gap : window) gap = next_exponential(rng);
        if (is_frame(window)) ++hits;
    }
    const auto ci = wilson_interval(hits, trials);
    return {static_cast<double>(hits) / static_cast<double>(trials), ci.lo, ci.hi, trials};
}

LowerBoundParameters lower_bound_parameters(std::uint64_t n, double c) {
    if (n < 2) throw std::invalid_argument("lower_bound_parameters: need n >= 2");
    if (!(c > 0.0)) throw std::invalid_argument("lower_bound_parameters: need c > 0");
    const double log2n = std::log2(static_cast<double>(n));
    const double root = std::sqrt(c * log2n);
    const int k = static_cast<int>(std::floor(root)) - 2;
    if (k < 1) throw std::domain_error("lower_bound_parameters: parameters below frame threshold");
    const double bound = std::exp(-std::pow(static_cast<double>(n), 1.0 - c) / root);
    return {k, bound};
}

}  // namespace highway
