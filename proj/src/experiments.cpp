#include "highway/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <thread>

#include "highway/generators.hpp"
#include "highway/interference.hpp"
#include "highway/points_io.hpp"
#include "highway/stats.hpp"
#include "highway/version.hpp"

namespace highway {

std::string to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::uniform: return "uniform";
        case GeneratorKind::expgaps: return "expgaps";
        case GeneratorKind::chain: return "chain";
        case GeneratorKind::equal: return "equal";
    }
    throw std::invalid_argument("unknown generator kind");
}

GeneratorKind generator_kind_from_string(const std::string& name) {
    if (name == "uniform") return GeneratorKind::uniform;
    if (name == "expgaps") return GeneratorKind::expgaps;
    if (name == "chain") return GeneratorKind::chain;
    if (name == "equal") return GeneratorKind::equal;
    throw std::invalid_argument("unknown generator kind: " + name);
}

void validate(const ExperimentConfig& config) {
    if (config.n_grid.empty()) throw std::invalid_argument("experiment config: empty n grid");
    for (std::size_t i = 0; i < config.n_grid.size(); ++i) {
        if (config.n_grid[i] < 2)
            throw std::invalid_argument("experiment config: every n must be >= 2");
        if (i > 0 && config.n_grid[i - 1] >= config.n_grid[i])
            throw std::invalid_argument("experiment config: n grid must be strictly increasing");
    }
    if (config.trials.size() != 1 && config.trials.size() != config.n_grid.size())
        throw std::invalid_argument(
            "experiment config: trials must hold one entry or one entry per grid point");
    for (const auto t : config.trials)
        if (t < 1) throw std::invalid_argument("experiment config: trials must be >= 1");
    if (config.generator == GeneratorKind::chain &&
        (!(config.chain_ratio > 0.0) || !(config.chain_ratio < 1.0)))
        throw std::invalid_argument("experiment config: chain ratio must lie in (0,1)");
}

std::uint64_t trials_for(const ExperimentConfig& config, std::size_t grid_index) {
    return config.trials.size() == 1 ? config.trials[0] : config.trials[grid_index];
}

PointSet generate_points(GeneratorKind kind, std::size_t n, Seed seed, std::uint64_t trial,
                         double chain_ratio) {
    switch (kind) {
        case GeneratorKind::uniform: return uniform_points(n, seed, trial);
        case GeneratorKind::expgaps: return from_gaps(exponential_gaps(n, seed, trial));
        case GeneratorKind::chain: return exponential_chain<double>(n, chain_ratio);
        case GeneratorKind::equal: return equally_spaced(n);
    }
    throw std::invalid_argument("unknown generator kind");
}

namespace {

// Static block partition over trial indices. Each worker writes only its own
// slots, so the gathered vector is the same for any worker count. The first
// worker exception, if any, is rethrown after the join.
template <typename Body>
void for_each_trial(unsigned threads, std::uint64_t total, const Body& body) {
    if (total == 0) return;
    unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, total));
    if (workers == 1) {
        for (std::uint64_t t = 0; t < total; ++t) body(t);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = total * w / workers;
        const std::uint64_t hi = total * (w + 1) / workers;
        pool.emplace_back([&body, &error = errors[w], lo, hi] {
            try {
                for (std::uint64_t t = lo; t < hi; ++t) body(t);
            } catch (...) {
                error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& error : errors)
        if (error) std::rethrow_exception(error);
}

std::int64_t nearest_rank(const std::vector<std::int64_t>& sorted, double p) {
    const auto count = static_cast<double>(sorted.size());
    auto rank = static_cast<std::size_t>(std::ceil(p * count));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    return sorted[rank - 1];
}

AggregateRow aggregate(std::size_t n, const std::vector<std::int64_t>& z_by_trial) {
    AggregateRow row;
    row.n = n;
    row.trials = z_by_trial.size();
    std::int64_t sum = 0;
    for (const auto z : z_by_trial) {
        if (z < 1 || z > static_cast<std::int64_t>(n) - 1)
            throw std::runtime_error("trial produced max interference outside [1, n-1]");
        sum += z;
    }
    row.mean = static_cast<double>(sum) / static_cast<double>(row.trials);
    double ss = 0.0;
    for (const auto z : z_by_trial) {
        const double d = static_cast<double>(z) - row.mean;
        ss += d * d;
    }
    row.stddev = std::sqrt(ss / static_cast<double>(row.trials));
    std::vector<std::int64_t> sorted = z_by_trial;
    std::sort(sorted.begin(), sorted.end());
    row.min = sorted.front();
    row.max = sorted.back();
    row.p50 = nearest_rank(sorted, 0.50);
    row.p95 = nearest_rank(sorted, 0.95);
    row.p99 = nearest_rank(sorted, 0.99);
    row.mean_over_sqrt_ln_n = row.mean / std::sqrt(std::log(static_cast<double>(n)));
    row.mean_over_sqrt_log2_n = row.mean / std::sqrt(std::log2(static_cast<double>(n)));
    return row;
}

}  // namespace

std::vector<AggregateRow> run_trials(const ExperimentConfig& config,
                                     std::vector<TrialRecord>* per_trial) {
    validate(config);
    std::vector<AggregateRow> rows;
    rows.reserve(config.n_grid.size());
    for (std::size_t gi = 0; gi < config.n_grid.size(); ++gi) {
        const std::size_t n = config.n_grid[gi];
        const std::uint64_t trials = trials_for(config, gi);
        std::vector<std::int64_t> z(trials, 0);
        for_each_trial(config.threads, trials, [&](std::uint64_t t) {
            const auto p = generate_points(config.generator, n, config.seed, t, config.chain_ratio);
            z[t] = interference_fast(p).max;
        });
        if (per_trial != nullptr)
            for (std::uint64_t t = 0; t < trials; ++t) per_trial->push_back({n, t, z[t]});
        rows.push_back(aggregate(n, z));
    }
    return rows;
}

ScalingFit fit_scaling(const std::vector<AggregateRow>& rows) {
    std::vector<std::size_t> distinct;
    for (const auto& r : rows) distinct.push_back(r.n);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3)
        throw std::invalid_argument("fit_scaling: need rows for at least 3 distinct n");

    const auto count = static_cast<double>(rows.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& r : rows) {
        sx += std::sqrt(std::log(static_cast<double>(r.n)));
        sy += r.mean;
    }
    const double xbar = sx / count;
    const double ybar = sy / count;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& r : rows) {
        const double dx = std::sqrt(std::log(static_cast<double>(r.n))) - xbar;
        const double dy = r.mean - ybar;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    ScalingFit fit;
    fit.a = sxy / sxx;
    fit.b = ybar - fit.a * xbar;
    if (syy > 0.0) {
        double ss_res = 0.0;
        for (const auto& r : rows) {
            const double pred = fit.a * std::sqrt(std::log(static_cast<double>(r.n))) + fit.b;
            const double e = r.mean - pred;
            ss_res += e * e;
        }
        fit.r2 = 1.0 - ss_res / syy;
    } else {
        fit.r2 = 0.0;  // constant response carries no explainable variance
    }
    return fit;
}

TailEstimate tail_estimate(std::size_t n, std::int64_t threshold, std::uint64_t trials, Seed seed,
                           unsigned threads) {
    if (n < 2) throw std::invalid_argument("tail_estimate: need n >= 2");
    if (trials < 1) throw std::invalid_argument("tail_estimate: need trials >= 1");
    if (threshold < 0) throw std::invalid_argument("tail_estimate: threshold must be >= 0");
    std::vector<unsigned char> hit(trials, 0);
    for_each_trial(threads, trials, [&](std::uint64_t t) {
        const auto p = uniform_points(n, seed, t);
        hit[t] = interference_fast(p).max >= threshold ? 1 : 0;
    });
    std::uint64_t hits = 0;
    for (const auto h : hit) hits += h;
    const auto ci = wilson_interval(hits, trials);
    return {static_cast<double>(hits) / static_cast<double>(trials), ci.lo, ci.hi, trials};
}

namespace {

std::string join_u64(const std::vector<std::uint64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string join_size(const std::vector<std::size_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

void write_metadata_comments(std::ostream& os, const ExperimentConfig& config) {
    os << "# highway " << kVersion << " simulate\n";
    os << "# generator=" << to_string(config.generator);
    if (config.generator == GeneratorKind::chain) os << " ratio=" << format_real(config.chain_ratio);
    os << " seed=" << config.seed.master << '\n';
    os << "# n_grid=" << join_size(config.n_grid) << " trials=" << join_u64(config.trials) << '\n';
}

nlohmann::json metadata_json(const ExperimentConfig& config) {
    nlohmann::json meta;
    meta["version"] = kVersion;
    meta["generator"] = to_string(config.generator);
    if (config.generator == GeneratorKind::chain) meta["ratio"] = config.chain_ratio;
    meta["seed"] = config.seed.master;
    meta["n_grid"] = config.n_grid;
    meta["trials"] = config.trials;
    return meta;
}

nlohmann::json row_json(const AggregateRow& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["trials"] = r.trials;
    j["mean"] = r.mean;
    j["std"] = r.stddev;
    j["min"] = r.min;
    j["p50"] = r.p50;
    j["p95"] = r.p95;
    j["p99"] = r.p99;
    j["max"] = r.max;
    j["mean_over_sqrt_ln_n"] = r.mean_over_sqrt_ln_n;
    j["mean_over_sqrt_log2_n"] = r.mean_over_sqrt_log2_n;
    return j;
}

}  // namespace

void write_rows_csv(std::ostream& os, const std::vector<AggregateRow>& rows,
                    const ExperimentConfig& config) {
    if (rows.empty()) throw std::invalid_argument("export: no rows");
    write_metadata_comments(os, config);
    os << kAggregateCsvHeader << '\n';
    for (const auto& r : rows) {
        os << r.n << ',' << r.trials << ',' << format_real(r.mean) << ','
           << format_real(r.stddev) << ',' << r.min << ',' << r.p50 << ',' << r.p95 << ','
           << r.p99 << ',' << r.max << ',' << format_real(r.mean_over_sqrt_ln_n) << ','
           << format_real(r.mean_over_sqrt_log2_n) << '\n';
    }
}

void write_rows_json(std::ostream& os, const std::vector<AggregateRow>& rows,
                     const ExperimentConfig& config) {
    if (rows.empty()) throw std::invalid_argument("export: no rows");
    nlohmann::json j;
    j["metadata"] = metadata_json(config);
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) j["rows"].push_back(row_json(r));
    os << j.dump(2) << '\n';
}

void write_fit_json(std::ostream& os, const ScalingFit& fit) {
    nlohmann::json j;
    j["a"] = fit.a;
    j["b"] = fit.b;
    j["r2"] = fit.r2;
    j["regressor"] = fit.regressor;
    os << j.dump(2) << '\n';
}

std::vector<AggregateRow> read_rows_csv(std::istream& is) {
    std::vector<AggregateRow> rows;
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            if (line.rfind("n,trials,mean", 0) != 0)
                throw InputError("aggregate csv: line " + std::to_string(line_no) +
                                 ": unexpected header");
            header_seen = true;
            continue;
        }
        std::vector<std::string> cells;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            const auto comma = line.find(',', pos);
            cells.push_back(line.substr(pos, comma == std::string::npos ? comma : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (cells.size() < 11)
            throw InputError("aggregate csv: line " + std::to_string(line_no) +
                             ": expected 11 columns");
        const auto parse_f = [&](const std::string& s) {
            double v = 0.0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
                throw InputError("aggregate csv: line " + std::to_string(line_no) +
                                 ": bad number '" + s + "'");
            return v;
        };
        AggregateRow r;
        r.n = static_cast<std::size_t>(parse_f(cells[0]));
        r.trials = static_cast<std::uint64_t>(parse_f(cells[1]));
        r.mean = parse_f(cells[2]);
        r.stddev = parse_f(cells[3]);
        r.min = static_cast<std::int64_t>(parse_f(cells[4]));
        r.p50 = static_cast<std::int64_t>(parse_f(cells[5]));
        r.p95 = static_cast<std::int64_t>(parse_f(cells[6]));
        r.p99 = static_cast<std::int64_t>(parse_f(cells[7]));
        r.max = static_cast<std::int64_t>(parse_f(cells[8]));
        r.mean_over_sqrt_ln_n = parse_f(cells[9]);
        r.mean_over_sqrt_log2_n = parse_f(cells[10]);
        rows.push_back(r);
    }
    if (!header_seen) throw InputError("aggregate csv: missing header");
    return rows;
}

}  // namespace highway
