#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "highway/model.hpp"
#include "highway/rng.hpp"

namespace highway {

enum class ScanMode { disjoint_blocks, sliding_window };

struct FrameProbabilityEstimate {
    double value = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::uint64_t trials = 0;
};

struct FrameReport {
    int k = 0;
    ScanMode mode = ScanMode::sliding_window;
    std::vector<std::size_t> starts;
    double probability_bound = 0.0;
    std::optional<FrameProbabilityEstimate> empirical;
};

/// A window of k+1 gaps is a k-frame when the first gap lies in [1,2] and
/// each later gap lies between a quarter and a half of its predecessor
/// (closed comparisons throughout).
bool is_frame(std::span<const double> window);

/// Locates k-frames in a gap sequence. disjoint_blocks inspects windows
/// starting at multiples of k; sliding_window inspects every start.
FrameReport scan_frames(const GapSequence& g, int k, ScanMode mode);

/// Interference at the node just after a frame window, with the window
/// embedded in its full gap sequence. The anchor participates as a node,
/// which makes the guarantee unconditional: whenever the window is a
/// k-frame the returned count is >= k, whatever surrounds it.
std::int64_t frame_interference_witness(const GapSequence& g, std::size_t start, int k);

/// 2^-(k+2)^2, the closed-form floor on the frame probability.
double frame_probability_bound(int k);

/// Monte Carlo frequency of (k+1)-tuples of Exponential(1) draws forming a
/// k-frame, with a Wilson 95% interval. One derived stream per trial.
FrameProbabilityEstimate estimate_frame_probability(int k, std::uint64_t trials, Seed seed);

/// Frame order and failure-probability bound for showing interference
/// >= floor(sqrt(c log2 n)) - 2 somewhere in a random set of n points.
struct LowerBoundParameters {
    int k = 0;
    double failure_probability_bound = 0.0;
};

LowerBoundParameters lower_bound_parameters(std::uint64_t n, double c);

}  // namespace highway
