#pragma once

#include <cstdint>
#include <span>

namespace highway {

/// One-sample Kolmogorov-Smirnov statistic of sorted values against the
/// uniform CDF on (0,1).
double ks_statistic_uniform(std::span<const double> sorted);

/// Two-sample Kolmogorov-Smirnov statistic of two sorted samples.
double ks_statistic_two_sample(std::span<const double> a, std::span<const double> b);

// Asymptotic critical values: K(alpha) = sqrt(-ln(alpha/2)/2) scaled by the
// effective sample size.
double ks_critical_one_sample(double alpha, std::size_t n);
double ks_critical_two_sample(double alpha, std::size_t n, std::size_t m);

struct BinomialInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Wilson score interval for a binomial proportion (z defaults to 95%).
BinomialInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                 double z = 1.959963984540054);

}  // namespace highway
