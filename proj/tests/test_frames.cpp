#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "highway/frames.hpp"
#include "highway/generators.hpp"
#include "highway/interference.hpp"

using namespace highway;

TEST_CASE("frame predicate on hand fixtures") {
    CHECK(is_frame(std::vector<double>{1.5, 0.6, 0.2}));
    CHECK_FALSE(is_frame(std::vector<double>{1.5, 0.9, 0.2}));  // 0.9 > 0.75
    CHECK_FALSE(is_frame(std::vector<double>{0.5, 0.2}));       // first gap < 1
    CHECK(is_frame(std::vector<double>{1.0}));
    CHECK_THROWS_AS(is_frame(std::span<const double>{}), std::invalid_argument);
}

TEST_CASE("frame predicate comparisons are closed") {
    CHECK(is_frame(std::vector<double>{1.0, 0.5}));    // exactly half
    CHECK(is_frame(std::vector<double>{1.0, 0.25}));   // exactly a quarter
    CHECK(is_frame(std::vector<double>{2.0, 0.5}));    // first gap at the top
    CHECK_FALSE(is_frame(std::vector<double>{1.0, 0.2}));
    CHECK_FALSE(is_frame(std::vector<double>{2.25, 1.0}));
}

TEST_CASE("sliding scan finds the only frame window") {
    const GapSequence g(0.0, {1.5, 0.6, 0.2, 7.0});
    const auto report = scan_frames(g, 2, ScanMode::sliding_window);
    CHECK(report.starts == std::vector<std::size_t>{0});
    CHECK(report.k == 2);
    CHECK(report.probability_bound == frame_probability_bound(2));
    CHECK_FALSE(report.empirical.has_value());
}

TEST_CASE("sliding scan finds repeated frames around a separator") {
    const GapSequence g(0.0, {1.5, 0.6, 0.2, 9.9, 1.5, 0.6, 0.2});
    CHECK(scan_frames(g, 2, ScanMode::sliding_window).starts ==
          std::vector<std::size_t>{0, 4});
}

TEST_CASE("no frames when every gap exceeds 2") {
    const GapSequence g(0.0, {2.5, 3.0, 4.5, 9.0});
    CHECK(scan_frames(g, 2, ScanMode::sliding_window).starts.empty());
}

TEST_CASE("disjoint starts are multiples of k and a subset of sliding starts") {
    auto rng = make_stream(Seed{91}, "scan_modes", 0, 0);
    for (int iter = 0; iter < 30; ++iter) {
        const int k = 1 + static_cast<int>(rng() % 3);
        std::vector<double> gs;
        for (int b = 0; b < 12; ++b) {
            if (rng() % 2 == 0) {
                const auto w = testing::random_frame_window(rng, k);
                gs.insert(gs.end(), w.begin(), w.end());
            } else {
                gs.push_back(2.0 + next_unit(rng) * 5.0);
            }
        }
        const GapSequence g(0.0, gs);
        const auto sliding = scan_frames(g, k, ScanMode::sliding_window);
        const auto disjoint = scan_frames(g, k, ScanMode::disjoint_blocks);
        for (const auto s : disjoint.starts) {
            CHECK(s % static_cast<std::size_t>(k) == 0);
            CHECK(std::find(sliding.starts.begin(), sliding.starts.end(), s) !=
                  sliding.starts.end());
        }
    }
}

TEST_CASE("scan rejects bad orders and short sequences") {
    const GapSequence g(0.0, {1.5, 0.6});
    CHECK_THROWS_AS(scan_frames(g, 0, ScanMode::sliding_window), std::invalid_argument);
    CHECK_THROWS_AS(scan_frames(g, 2, ScanMode::sliding_window), std::invalid_argument);
}

TEST_CASE("scanned windows satisfy the geometric envelope") {
    // Inside a frame the i-th gap lies in [4^-i, 2^-i].
    auto rng = make_stream(Seed{92}, "envelope", 0, 0);
    for (int iter = 0; iter < 30; ++iter) {
        const int k = 1 + static_cast<int>(rng() % 5);
        auto gs = testing::random_frame_window(rng, k);
        gs.push_back(3.0);
        const auto report = scan_frames(GapSequence(0.0, gs), k, ScanMode::sliding_window);
        REQUIRE(!report.starts.empty());
        for (const auto start : report.starts)
            for (int i = 0; i <= k; ++i) {
                const double gap = gs[start + static_cast<std::size_t>(i)];
                CHECK(gap >= std::ldexp(1.0, -2 * i));
                CHECK(gap <= std::ldexp(1.0, -i) * 2.0);  // 2^-i scaled by the first gap <= 2
            }
    }
}

TEST_CASE("witness interference on the bare fixtures") {
    CHECK(frame_interference_witness(GapSequence(0.0, {1.5, 0.6, 0.2}), 0, 2) == 2);
    CHECK(frame_interference_witness(GapSequence(0.0, {1.0, 0.5}), 0, 1) >= 1);
    CHECK_THROWS_AS(frame_interference_witness(GapSequence(0.0, {1.5, 0.9, 0.2}), 0, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(frame_interference_witness(GapSequence(0.0, {1.5, 0.6}), 0, 2),
                    std::invalid_argument);
}

TEST_CASE("embedded frames always force interference >= k at the closing node") {
    auto rng = make_stream(Seed{93}, "witness_embed", 0, 0);
    for (int iter = 0; iter < 300; ++iter) {
        const int k = 1 + static_cast<int>(rng() % 6);
        const auto window = testing::random_frame_window(rng, k);
        std::vector<double> gs;
        const std::size_t before = rng() % 12;
        const std::size_t after = rng() % 12;
        for (std::size_t i = 0; i < before; ++i) gs.push_back(next_exponential(rng));
        const std::size_t start = gs.size();
        gs.insert(gs.end(), window.begin(), window.end());
        for (std::size_t i = 0; i < after; ++i) gs.push_back(next_exponential(rng));
        const GapSequence g(0.0, gs);
        const auto witness = frame_interference_witness(g, start, k);
        CHECK(witness >= k);

        // cross-check against the quadratic oracle on the same node set
        std::vector<double> xs{g.anchor()};
        double acc = g.anchor();
        for (const auto gap : gs) xs.push_back(acc += gap);
        const auto oracle = interference_naive(PointSet(xs));
        CHECK(witness == oracle.counts[start + static_cast<std::size_t>(k) + 1]);
    }
}

TEST_CASE("frame probability bound is 2^-(k+2)^2") {
    CHECK(frame_probability_bound(0) == 0.0625);
    CHECK(frame_probability_bound(1) == 0.001953125);
    CHECK(frame_probability_bound(3) == std::ldexp(1.0, -25));
    CHECK_THROWS_AS(frame_probability_bound(-1), std::invalid_argument);
}

TEST_CASE("frame probability estimate approaches the exact k=0 integral") {
    // P(X in [1,2]) = e^-1 - e^-2 for an Exp(1) draw.
    const auto est = estimate_frame_probability(0, 100000, Seed{101});
    const double exact = std::exp(-1.0) - std::exp(-2.0);
    CHECK(est.value > exact - 0.006);
    CHECK(est.value < exact + 0.006);
    CHECK(est.value >= frame_probability_bound(0));
    CHECK(est.trials == 100000);
    CHECK(est.ci_lo <= est.value);
    CHECK(est.ci_hi >= est.value);

    const auto rerun = estimate_frame_probability(0, 100000, Seed{101});
    CHECK(rerun.value == est.value);
}

TEST_CASE("frame probability estimate at a hopeless budget reports zero with its trial count") {
    const auto est = estimate_frame_probability(5, 1000, Seed{102});
    CHECK(est.value == 0.0);
    CHECK(est.trials == 1000);
    CHECK(est.ci_hi > 0.0);  // the interval still admits the tiny bound
}

TEST_CASE("lower bound parameters from the closed formulas") {
    const auto a = lower_bound_parameters(1ull << 36, 1.0);
    CHECK(a.k == 4);
    CHECK(a.failure_probability_bound == doctest::Approx(std::exp(-1.0 / 6.0)).epsilon(1e-12));

    const auto b = lower_bound_parameters(1ull << 32, 0.5);
    CHECK(b.k == 2);
    CHECK(b.failure_probability_bound == 0.0);  // exp(-2^16/4) underflows

    CHECK_THROWS_AS(lower_bound_parameters(1ull << 8, 0.1), std::domain_error);
    CHECK_THROWS_AS(lower_bound_parameters(1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_parameters(16, 0.0), std::invalid_argument);
}
