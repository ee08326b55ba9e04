#include "highway/interference.hpp"

#include <nlohmann/json.hpp>
#include <ostream>

#include "highway/points_io.hpp"

namespace highway {

SidedProfile short_range_left_interference(const GapSequence& g, double threshold) {
    if (g.size() < 2)
        throw std::invalid_argument("short_range_left_interference: need at least 2 gaps");
    if (!(threshold > 0.0))
        throw std::invalid_argument("short_range_left_interference: threshold must be positive");
    const auto p = from_gaps(g);
    const auto ranges = assign_ranges(p);
    const auto& xs = p.positions();
    const std::size_t n = xs.size();
    std::vector<std::int64_t> diff(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        // Point i's left gap is gaps[i]; for the first sensor that is the
        // anchor gap.
        if (!(g.gaps()[i] <= threshold)) continue;
        const double hi = xs[i] + ranges.ranges[i];
        const auto last =
            std::upper_bound(xs.begin() + static_cast<std::ptrdiff_t>(i) + 1, xs.end(), hi);
        const auto upper = static_cast<std::size_t>(last - xs.begin());
        if (i + 1 < upper) {
            ++diff[i + 1];
            --diff[upper];
        }
    }
    SidedProfile prof;
    prof.side = Side::left;
    prof.threshold = threshold;
    prof.counts.assign(n, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += diff[i];
        prof.counts[i] = acc;
    }
    return prof;
}

void write_profile_csv(std::ostream& os, const PointSet& p, const InterferenceProfile& prof) {
    if (p.size() != prof.counts.size())
        throw std::invalid_argument("profile export: point/count length mismatch");
    os << "index,position,z\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << i << ',' << format_real(p[i]) << ',' << prof.counts[i] << '\n';
    os << "# z_max=" << prof.max << " argmax=" << prof.argmax << '\n';
}

void write_profile_json(std::ostream& os, const PointSet& p, const InterferenceProfile& prof) {
    if (p.size() != prof.counts.size())
        throw std::invalid_argument("profile export: point/count length mismatch");
    nlohmann::json j;
    j["positions"] = p.positions();
    j["counts"] = prof.counts;
    j["max"] = prof.max;
    j["argmax"] = prof.argmax;
    os << j.dump(2) << '\n';
}

}  // namespace highway
