#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace highway {

/// Master seed for an experiment. Concrete random streams are derived from
/// it together with a (purpose, n, trial) label, so every trial gets its own
/// independent stream and results do not depend on execution order.
struct Seed {
    std::uint64_t master = 1;
};

/// Counter-based 64-bit generator (splitmix64). The state walks a fixed
/// stride and the output is a bijective hash of it, so streams seeded from
/// distinct labels are independent for all practical purposes and the
/// sequence is identical on every platform.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

namespace detail {

// splitmix64 finalizer, used as a 64-bit mixer when deriving stream keys.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

}  // namespace detail

/// Derives the generator for one labelled stream. Identical arguments give a
/// bit-identical stream; changing any label decorrelates it.
inline SplitMix64 make_stream(Seed seed, std::string_view purpose, std::uint64_t n,
                              std::uint64_t trial) {
    std::uint64_t h = seed.master;
    h = detail::mix64(h ^ detail::fnv1a(purpose));
    h = detail::mix64(h ^ n);
    h = detail::mix64(h ^ trial);
    return SplitMix64(h);
}

/// Uniform draw from the open interval (0,1) with 53-bit resolution.
/// Exact zero is rejected so downstream logs stay finite.
inline double next_unit(SplitMix64& rng) {
    for (;;) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u > 0.0) return u;
    }
}

/// Exponential(1) draw by inverse CDF, -ln(1-u). Always strictly positive.
inline double next_exponential(SplitMix64& rng) {
    return -std::log(1.0 - next_unit(rng));
}

}  // namespace highway
