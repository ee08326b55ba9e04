#include "highway/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace highway {

double ks_statistic_uniform(std::span<const double> sorted) {
    const std::size_t n = sorted.size();
    if (n == 0) throw std::invalid_argument("ks statistic: empty sample");
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double cdf = sorted[i];  // uniform CDF on (0,1)
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n) - cdf;
        const double lo = cdf - static_cast<double>(i) / static_cast<double>(n);
        d = std::max({d, hi, lo});
    }
    return d;
}

double ks_statistic_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks statistic: empty sample");
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        const double fa = static_cast<double>(i) / static_cast<double>(a.size());
        const double fb = static_cast<double>(j) / static_cast<double>(b.size());
        d = std::max(d, std::abs(fa - fb));
    }
    return d;
}

namespace {

double ks_scale(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("ks critical value: alpha must lie in (0,1)");
    return std::sqrt(-std::log(alpha / 2.0) / 2.0);
}

}  // namespace

double ks_critical_one_sample(double alpha, std::size_t n) {
    if (n == 0) throw std::invalid_argument("ks critical value: empty sample");
    return ks_scale(alpha) / std::sqrt(static_cast<double>(n));
}

double ks_critical_two_sample(double alpha, std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) throw std::invalid_argument("ks critical value: empty sample");
    const double nn = static_cast<double>(n);
    const double mm = static_cast<double>(m);
    return ks_scale(alpha) * std::sqrt((nn + mm) / (nn * mm));
}

BinomialInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) throw std::invalid_argument("wilson interval: need trials >= 1");
    if (successes > trials) throw std::invalid_argument("wilson interval: successes > trials");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    BinomialInterval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
    if (successes == 0) ci.lo = 0.0;  // the algebra gives exactly 0, minus roundoff
    if (successes == trials) ci.hi = 1.0;
    return ci;
}

}  // namespace highway
