#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "highway/model.hpp"
#include "highway/rng.hpp"

namespace highway {

/// n i.i.d. uniform positions in (0,1), sorted. The astronomically rare
/// duplicate draw is rejected and the whole set redrawn from the same
/// stream, so the result is still a pure function of (seed, n, trial).
PointSet uniform_points(std::size_t n, Seed seed, std::uint64_t trial = 0);

/// count i.i.d. Exponential(1) spacings, anchored at 0.
GapSequence exponential_gaps(std::size_t count, Seed seed, std::uint64_t trial = 0);

/// Sorted uniform positions built the spacings way: n+1 exponential gaps,
/// prefix sums, divided by the total. Distributed identically to
/// uniform_points; kept as an independent construction so the two routes
/// can be tested against each other.
PointSet uniform_via_exponentials(std::size_t n, Seed seed, std::uint64_t trial = 0);

/// Deterministic fixture: x_i = i/(n+1) for i = 1..n.
PointSet equally_spaced(std::size_t n);

/// Worst-case chain with geometrically shrinking gaps toward the left end:
/// x_i = ratio^(n-i) for i = 1..n. At ratio 1/2 every interior broadcast
/// interval stretches back to 0, so the leftmost point collects n-2
/// interferers. The chain spans a 1:ratio^(n-1) dynamic range; sizes that
/// the coordinate type cannot spread out are rejected (double holds a
/// ratio-1/2 chain up to n = 1075, long double up to n = 16446).
template <std::floating_point Real = double>
BasicPointSet<Real> exponential_chain(std::size_t n, Real ratio = Real(0.5)) {
    if (n < 2) throw std::invalid_argument("exponential_chain: need n >= 2");
    if (!(ratio > Real(0)) || !(ratio < Real(1)))
        throw std::invalid_argument("exponential_chain: ratio must lie in (0,1)");
    std::vector<Real> xs(n);
    Real x = Real(1);
    for (std::size_t i = n; i-- > 0;) {
        xs[i] = x;
        x *= ratio;
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(xs[i] > Real(0)) || !(xs[i] < xs[i + 1]))
            throw std::domain_error("exponential_chain: n = " + std::to_string(n) +
                                    " underflows the coordinate type at this ratio");
    return BasicPointSet<Real>(std::move(xs));
}

}  // namespace highway
