#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace highway {

/// A finite set of sensor positions on the line, strictly increasing.
/// Immutable after construction; all operations on it are pure.
template <std::floating_point Real>
class BasicPointSet {
public:
    BasicPointSet() = default;

    /// Takes positions that are already strictly increasing; throws
    /// std::invalid_argument otherwise (duplicates or non-finite values).
    explicit BasicPointSet(std::vector<Real> positions) : positions_(std::move(positions)) {
        for (std::size_t i = 0; i < positions_.size(); ++i) {
            if (!std::isfinite(positions_[i]))
                throw std::invalid_argument("point set: non-finite position at index " +
                                            std::to_string(i));
            if (i > 0 && !(positions_[i - 1] < positions_[i]))
                throw std::invalid_argument("point set: positions not strictly increasing at index " +
                                            std::to_string(i));
        }
    }

    std::size_t size() const { return positions_.size(); }
    bool empty() const { return positions_.empty(); }
    Real operator[](std::size_t i) const { return positions_[i]; }
    Real front() const { return positions_.front(); }
    Real back() const { return positions_.back(); }
    const std::vector<Real>& positions() const { return positions_; }

private:
    std::vector<Real> positions_;
};

/// Consecutive spacings between points, plus the anchor they hang off.
/// The anchor is a reference origin, not itself a sensor: the first sensor
/// sits at anchor + gaps[0].
template <std::floating_point Real>
class BasicGapSequence {
public:
    BasicGapSequence() = default;

    BasicGapSequence(Real anchor, std::vector<Real> gaps)
        : anchor_(anchor), gaps_(std::move(gaps)) {
        if (!std::isfinite(anchor_)) throw std::invalid_argument("gap sequence: non-finite anchor");
        for (std::size_t i = 0; i < gaps_.size(); ++i)
            if (!std::isfinite(gaps_[i]) || !(gaps_[i] > Real(0)))
                throw std::invalid_argument("gap sequence: gap not strictly positive at index " +
                                            std::to_string(i));
    }

    Real anchor() const { return anchor_; }
    std::size_t size() const { return gaps_.size(); }
    const std::vector<Real>& gaps() const { return gaps_; }

private:
    Real anchor_ = 0;
    std::vector<Real> gaps_;
};

/// Broadcast range per point: the distance to its farther adjacent
/// neighbor (the only neighbor at the two ends).
template <std::floating_point Real>
struct BasicRangeAssignment {
    std::vector<Real> ranges;
};

template <std::floating_point Real>
struct BasicInterval {
    Real lo;
    Real hi;
    bool contains(Real x) const { return lo <= x && x <= hi; }
};

/// Closed broadcast intervals, one per point, radius equal to its range.
template <std::floating_point Real>
struct BasicIntervalSet {
    std::vector<BasicInterval<Real>> intervals;
};

using PointSet = BasicPointSet<double>;
using GapSequence = BasicGapSequence<double>;
using RangeAssignment = BasicRangeAssignment<double>;
using Interval = BasicInterval<double>;
using IntervalSet = BasicIntervalSet<double>;

/// Ingestion front door: sorts raw coordinates and validates the
/// strict-increase invariant. Duplicates are reported by their sorted index.
template <std::floating_point Real>
BasicPointSet<Real> sort_and_validate(std::vector<Real> raw) {
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (!std::isfinite(raw[i]))
            throw std::invalid_argument("point set: non-finite value at index " + std::to_string(i));
    std::sort(raw.begin(), raw.end());
    for (std::size_t i = 1; i < raw.size(); ++i)
        if (raw[i - 1] == raw[i])
            throw std::invalid_argument("point set: duplicate value at sorted index " +
                                        std::to_string(i));
    return BasicPointSet<Real>(std::move(raw));
}

/// Spacings of a point set; anchor is the first position.
template <std::floating_point Real>
BasicGapSequence<Real> gaps(const BasicPointSet<Real>& p) {
    if (p.empty()) throw std::invalid_argument("gaps: point set is empty");
    std::vector<Real> g(p.size() - 1);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) g[i] = p[i + 1] - p[i];
    return BasicGapSequence<Real>(p.front(), std::move(g));
}

/// Rebuilds points as anchor-started prefix sums. The anchor itself is not
/// a point: the i-th point is anchor + gaps[0] + ... + gaps[i].
template <std::floating_point Real>
BasicPointSet<Real> from_gaps(const BasicGapSequence<Real>& g) {
    std::vector<Real> xs(g.size());
    Real acc = g.anchor();
    for (std::size_t i = 0; i < g.size(); ++i) {
        acc += g.gaps()[i];
        xs[i] = acc;
    }
    return BasicPointSet<Real>(std::move(xs));
}

/// Max-neighbor range assignment. Interior points take the larger of their
/// two adjacent spacings; the end points take their single spacing.
template <std::floating_point Real>
BasicRangeAssignment<Real> assign_ranges(const BasicPointSet<Real>& p) {
    const std::size_t n = p.size();
    if (n < 2) throw std::invalid_argument("assign_ranges: need at least 2 points");
    std::vector<Real> r(n);
    r[0] = p[1] - p[0];
    r[n - 1] = p[n - 1] - p[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) r[i] = std::max(p[i] - p[i - 1], p[i + 1] - p[i]);
    return BasicRangeAssignment<Real>{std::move(r)};
}

template <std::floating_point Real>
BasicIntervalSet<Real> broadcast_intervals(const BasicPointSet<Real>& p,
                                           const BasicRangeAssignment<Real>& r) {
    if (p.size() != r.ranges.size())
        throw std::invalid_argument("broadcast_intervals: point/range length mismatch");
    std::vector<BasicInterval<Real>> iv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        iv[i] = BasicInterval<Real>{p[i] - r.ranges[i], p[i] + r.ranges[i]};
    return BasicIntervalSet<Real>{std::move(iv)};
}

/// Reflection through the origin, re-sorted. Negation is exact, so the
/// mirrored set carries exactly the reversed gap structure.
template <std::floating_point Real>
BasicPointSet<Real> mirrored(const BasicPointSet<Real>& p) {
    std::vector<Real> xs(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) xs[i] = -p[p.size() - 1 - i];
    return BasicPointSet<Real>(std::move(xs));
}

}  // namespace highway
