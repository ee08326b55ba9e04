#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "highway/model.hpp"
#include "highway/rng.hpp"

namespace highway {

enum class GeneratorKind { uniform, expgaps, chain, equal };

std::string to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(const std::string& name);

/// Full description of a Monte Carlo run. trials holds either one entry
/// (applied to every n) or one entry per grid point, so large n can carry an
/// explicit smaller budget; the budget is part of the config, never adaptive.
struct ExperimentConfig {
    std::vector<std::size_t> n_grid;
    std::vector<std::uint64_t> trials;
    Seed seed{1};
    GeneratorKind generator = GeneratorKind::uniform;
    double chain_ratio = 0.5;
    unsigned threads = 0;  // 0: hardware concurrency; result is independent of it
};

void validate(const ExperimentConfig& config);
std::uint64_t trials_for(const ExperimentConfig& config, std::size_t grid_index);

/// Per-n aggregate of the maximum interference across seeded trials.
/// Quantiles are nearest-rank on the sorted per-trial values; stddev is the
/// population standard deviation.
struct AggregateRow {
    std::size_t n = 0;
    std::uint64_t trials = 0;
    double mean = 0.0;
    double stddev = 0.0;
    std::int64_t min = 0;
    std::int64_t p50 = 0;
    std::int64_t p95 = 0;
    std::int64_t p99 = 0;
    std::int64_t max = 0;
    double mean_over_sqrt_ln_n = 0.0;
    double mean_over_sqrt_log2_n = 0.0;
};

struct TrialRecord {
    std::size_t n = 0;
    std::uint64_t trial = 0;
    std::int64_t z_max = 0;
};

/// One point set per (n, trial), maximum interference of each, aggregated
/// per n. Per-trial streams are derived only from (seed, n, trial), and
/// aggregation is order-insensitive, so the output is bit-identical for any
/// thread count.
std::vector<AggregateRow> run_trials(const ExperimentConfig& config,
                                     std::vector<TrialRecord>* per_trial = nullptr);

/// Ordinary least squares of mean max-interference against sqrt(ln n).
struct ScalingFit {
    double a = 0.0;   // slope
    double b = 0.0;   // intercept
    double r2 = 0.0;  // coefficient of determination
    std::string regressor = "sqrt_ln_n";
};

ScalingFit fit_scaling(const std::vector<AggregateRow>& rows);

/// Fraction of uniform-model trials at size n whose maximum interference
/// reaches threshold, with a Wilson 95% interval.
struct TailEstimate {
    double fraction = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::uint64_t trials = 0;
};

TailEstimate tail_estimate(std::size_t n, std::int64_t threshold, std::uint64_t trials, Seed seed,
                           unsigned threads = 0);

/// Dispatch used by the harness and the CLI: one point set for (kind, n,
/// seed, trial). chain and equal are deterministic and ignore the stream.
PointSet generate_points(GeneratorKind kind, std::size_t n, Seed seed, std::uint64_t trial,
                         double chain_ratio = 0.5);

// Exports. CSV carries a comment metadata block (config, seed, generator,
// library version) followed by a fixed header; JSON mirrors the same fields.
// Both are byte-stable for a fixed config.
void write_rows_csv(std::ostream& os, const std::vector<AggregateRow>& rows,
                    const ExperimentConfig& config);
void write_rows_json(std::ostream& os, const std::vector<AggregateRow>& rows,
                     const ExperimentConfig& config);
void write_fit_json(std::ostream& os, const ScalingFit& fit);

/// Reads rows back from the CSV schema written by write_rows_csv.
std::vector<AggregateRow> read_rows_csv(std::istream& is);

inline constexpr std::string_view kAggregateCsvHeader =
    "n,trials,mean,std,min,p50,p95,p99,max,mean_over_sqrt_ln_n,mean_over_sqrt_log2_n";

}  // namespace highway
