#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "highway/generators.hpp"
#include "highway/points_io.hpp"

using namespace highway;

TEST_CASE("format_real is shortest round-trip") {
    CHECK(format_real(0.5) == "0.5");
    CHECK(format_real(1.0) == "1");
    CHECK(format_real(-0.125) == "-0.125");
    auto rng = make_stream(Seed{55}, "format_roundtrip", 0, 0);
    for (int i = 0; i < 200; ++i) {
        const double v = (next_unit(rng) - 0.5) * std::ldexp(1.0, static_cast<int>(rng() % 64) - 32);
        CHECK(std::strtod(format_real(v).c_str(), nullptr) == v);
    }
}

TEST_CASE("points files round-trip exactly") {
    const auto p = uniform_points(257, Seed{56});
    std::ostringstream os;
    write_points(os, p, "fixture");
    std::istringstream is(os.str());
    CHECK(read_points(is).positions() == p.positions());
}

TEST_CASE("points files round-trip the subnormal range") {
    // a full-depth ratio-1/2 chain bottoms out at the smallest subnormal
    const auto chain = exponential_chain<double>(1075);
    std::ostringstream os;
    write_points(os, chain);
    std::istringstream is(os.str());
    CHECK(read_points(is).positions() == chain.positions());
}

TEST_CASE("reader skips comments and blank lines") {
    std::istringstream is("# header\n\n0.25\n  0.5\n# mid comment\n0.75\n");
    CHECK(read_points(is).positions() == std::vector<double>{0.25, 0.5, 0.75});
}

TEST_CASE("reader reports offending line numbers") {
    std::istringstream bad_token("0.25\nhello\n");
    CHECK_THROWS_WITH_AS(read_points(bad_token), doctest::Contains("line 2"), InputError);

    std::istringstream dup("# c\n0.25\n0.25\n");
    CHECK_THROWS_WITH_AS(read_points(dup), doctest::Contains("line 3"), InputError);

    std::istringstream descending("0.5\n0.25\n");
    CHECK_THROWS_WITH_AS(read_points(descending), doctest::Contains("ascending"), InputError);

    std::istringstream infinite("0.5\ninf\n");
    CHECK_THROWS_WITH_AS(read_points(infinite), doctest::Contains("finite"), InputError);
}

TEST_CASE("missing file raises an input error") {
    CHECK_THROWS_AS(read_points_file("/nonexistent/points.txt"), InputError);
}
