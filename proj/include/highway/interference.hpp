#pragma once

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "highway/model.hpp"

namespace highway {

/// Per-point interference counts: counts[i] is the number of other points
/// whose broadcast interval contains point i. max is the largest count,
/// argmax the smallest index attaining it.
struct InterferenceProfile {
    std::vector<std::int64_t> counts;
    std::int64_t max = 0;
    std::size_t argmax = 0;
};

/// One-sided count per point. For side == left, counts[t] is the number of
/// points left of t whose interval reaches t. threshold, when set, admits
/// only contributors whose own left spacing is <= threshold.
enum class Side { left, right };

struct SidedProfile {
    std::vector<std::int64_t> counts;
    Side side = Side::left;
    std::optional<double> threshold;
};

namespace detail {

inline void finalize_profile(InterferenceProfile& prof) {
    prof.max = 0;
    prof.argmax = 0;
    for (std::size_t i = 0; i < prof.counts.size(); ++i) {
        if (prof.counts[i] > prof.max) {
            prof.max = prof.counts[i];
            prof.argmax = i;
        }
    }
}

}  // namespace detail

/// Direct quadratic evaluation of the definition: for every interval, test
/// every other point for membership. This is the reference oracle; the fast
/// engine must reproduce it bit for bit.
template <std::floating_point Real>
InterferenceProfile interference_naive(const BasicPointSet<Real>& p) {
    const std::size_t n = p.size();
    if (n < 2) throw std::invalid_argument("interference: need at least 2 points");
    const auto iv = broadcast_intervals(p, assign_ranges(p));
    InterferenceProfile prof;
    prof.counts.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (i != j && iv.intervals[j].contains(p[i])) ++prof.counts[i];
    detail::finalize_profile(prof);
    return prof;
}

/// O(n log n) engine. Every interval covers a contiguous index range of the
/// sorted points; locate it by binary search, accumulate +1/-1 in a
/// difference array, prefix-sum, and subtract each point's self-coverage
/// (a point always lies in its own interval). The interval bounds are
/// computed with the same expressions as the naive path, so both engines
/// see identical floating-point values.
template <std::floating_point Real>
InterferenceProfile interference_fast(const BasicPointSet<Real>& p) {
    const std::size_t n = p.size();
    if (n < 2) throw std::invalid_argument("interference: need at least 2 points");
    const auto ranges = assign_ranges(p);
    const auto& xs = p.positions();
    std::vector<std::int64_t> diff(n + 1, 0);
    for (std::size_t j = 0; j < n; ++j) {
        const Real lo = xs[j] - ranges.ranges[j];
        const Real hi = xs[j] + ranges.ranges[j];
        const auto first = std::lower_bound(xs.begin(), xs.end(), lo);
        const auto last = std::upper_bound(first, xs.end(), hi);
        ++diff[static_cast<std::size_t>(first - xs.begin())];
        --diff[static_cast<std::size_t>(last - xs.begin())];
    }
    InterferenceProfile prof;
    prof.counts.assign(n, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += diff[i];
        prof.counts[i] = acc - 1;  // drop self-coverage
    }
    detail::finalize_profile(prof);
    return prof;
}

template <std::floating_point Real>
std::int64_t max_interference(const BasicPointSet<Real>& p) {
    return interference_fast(p).max;
}

/// Left-interference: counts[t] = number of points i < t whose interval
/// reaches x_t. Membership uses the interval's upper bound x_i + R_i, the
/// same value the full profile uses, so left plus mirrored-left decomposes
/// the full counts exactly.
template <std::floating_point Real>
SidedProfile left_interference(const BasicPointSet<Real>& p) {
    const std::size_t n = p.size();
    if (n < 2) throw std::invalid_argument("left_interference: need at least 2 points");
    const auto ranges = assign_ranges(p);
    const auto& xs = p.positions();
    std::vector<std::int64_t> diff(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Real hi = xs[i] + ranges.ranges[i];
        const auto last = std::upper_bound(xs.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                           xs.end(), hi);
        const auto upper = static_cast<std::size_t>(last - xs.begin());
        if (i + 1 < upper) {
            ++diff[i + 1];
            --diff[upper];
        }
    }
    SidedProfile prof;
    prof.side = Side::left;
    prof.counts.assign(n, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += diff[i];
        prof.counts[i] = acc;
    }
    return prof;
}

/// Short-range variant: a contributor is admitted only when the gap
/// immediately to its left is <= threshold. Takes the gap sequence rather
/// than the points because the first sensor's left gap is the anchor gap.
SidedProfile short_range_left_interference(const GapSequence& g, double threshold);

/// Profile export. CSV columns are index,position,z with a trailing
/// comment line carrying z_max and argmax; JSON mirrors the same fields.
void write_profile_csv(std::ostream& os, const PointSet& p, const InterferenceProfile& prof);
void write_profile_json(std::ostream& os, const PointSet& p, const InterferenceProfile& prof);

}  // namespace highway
