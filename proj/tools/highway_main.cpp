// Command-line front end: generate point sets, compute interference
// profiles, run seeded Monte Carlo experiments, fit the scaling law, and
// check the worst-case chain. Exit codes: 0 success, 2 usage/input error,
// 1 runtime error.

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "highway/experiments.hpp"
#include "highway/frames.hpp"
#include "highway/generators.hpp"
#include "highway/interference.hpp"
#include "highway/points_io.hpp"
#include "highway/version.hpp"

namespace {

using highway::InputError;

// Counts accept power expressions such as 2^16 alongside plain integers.
std::uint64_t parse_count(const std::string& text) {
    const auto parse_u64 = [&](std::string_view s) {
        std::uint64_t v = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
            throw InputError("not a count: '" + text + "'");
        return v;
    };
    const auto caret = text.find('^');
    if (caret == std::string::npos) return parse_u64(text);
    const std::uint64_t base = parse_u64(std::string_view(text).substr(0, caret));
    const std::uint64_t exp = parse_u64(std::string_view(text).substr(caret + 1));
    if (base == 0) return exp == 0 ? 1 : 0;
    std::uint64_t value = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (value > std::numeric_limits<std::uint64_t>::max() / base)
            throw InputError("count overflows 64 bits: '" + text + "'");
        value *= base;
    }
    return value;
}

std::vector<std::uint64_t> parse_count_list(const std::string& text) {
    std::vector<std::uint64_t> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InputError("empty entry in list: '" + text + "'");
        values.push_back(parse_count(item));
    }
    if (values.empty()) throw InputError("empty list: '" + text + "'");
    return values;
}

// Writes to the path, or to stdout when the path is empty.
void deliver(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << payload;
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

struct GenOptions {
    std::string kind = "uniform";
    std::string n_text;
    std::uint64_t seed = 1;
    std::uint64_t trial = 0;
    double ratio = 0.5;
    std::string out;
};

void run_gen(const GenOptions& opt) {
    const auto n = static_cast<std::size_t>(parse_count(opt.n_text));
    const auto kind = highway::generator_kind_from_string(opt.kind);
    highway::PointSet points;
    std::string comment = "highway gen kind=" + opt.kind + " n=" + std::to_string(n);
    switch (kind) {
        case highway::GeneratorKind::uniform:
        case highway::GeneratorKind::expgaps:
            points = highway::generate_points(kind, n, highway::Seed{opt.seed}, opt.trial);
            comment += " seed=" + std::to_string(opt.seed) + " trial=" + std::to_string(opt.trial);
            break;
        case highway::GeneratorKind::chain:
            try {
                points = highway::exponential_chain<double>(n, opt.ratio);
            } catch (const std::domain_error& e) {
                throw InputError(e.what());
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            comment += " ratio=" + highway::format_real(opt.ratio);
            break;
        case highway::GeneratorKind::equal:
            points = highway::equally_spaced(n);
            break;
    }
    std::ostringstream body;
    highway::write_points(body, points, comment);
    deliver(opt.out, body.str());
}

struct InterfereOptions {
    std::string in;
    std::string algo = "fast";
    std::string format = "csv";
    std::string out;
};

void run_interfere(const InterfereOptions& opt) {
    const auto points = highway::read_points_file(opt.in);
    if (points.size() < 2) throw InputError(opt.in + ": need at least 2 points");
    const auto profile = opt.algo == "naive" ? highway::interference_naive(points)
                                             : highway::interference_fast(points);
    std::ostringstream body;
    if (opt.format == "json")
        highway::write_profile_json(body, points, profile);
    else
        highway::write_profile_csv(body, points, profile);
    deliver(opt.out, body.str());
}

struct SimulateOptions {
    std::string n_grid_text;
    std::string trials_text;
    std::uint64_t seed = 1;
    std::string generator = "uniform";
    double ratio = 0.5;
    unsigned threads = 0;
    std::string format = "csv";
    std::string out;
    std::string per_trial_out;
};

highway::ExperimentConfig make_config(const SimulateOptions& opt) {
    highway::ExperimentConfig config;
    for (const auto n : parse_count_list(opt.n_grid_text))
        config.n_grid.push_back(static_cast<std::size_t>(n));
    config.trials = parse_count_list(opt.trials_text);
    config.seed = highway::Seed{opt.seed};
    config.generator = highway::generator_kind_from_string(opt.generator);
    config.chain_ratio = opt.ratio;
    config.threads = opt.threads;
    try {
        highway::validate(config);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return config;
}

void run_simulate(const SimulateOptions& opt) {
    const auto config = make_config(opt);
    std::vector<highway::TrialRecord> records;
    const bool want_records = !opt.per_trial_out.empty();
    const auto rows = highway::run_trials(config, want_records ? &records : nullptr);
    std::ostringstream body;
    if (opt.format == "json")
        highway::write_rows_json(body, rows, config);
    else
        highway::write_rows_csv(body, rows, config);
    deliver(opt.out, body.str());
    if (want_records) {
        std::ostringstream pt;
        pt << "n,trial,z_max\n";
        for (const auto& rec : records)
            pt << rec.n << ',' << rec.trial << ',' << rec.z_max << '\n';
        deliver(opt.per_trial_out, pt.str());
    }
}

struct ScalingOptions {
    std::string in;
    std::string out;
};

void run_scaling(const ScalingOptions& opt) {
    std::ifstream in(opt.in);
    if (!in) throw InputError("cannot open aggregate csv: " + opt.in);
    const auto rows = highway::read_rows_csv(in);
    highway::ScalingFit fit;
    try {
        fit = highway::fit_scaling(rows);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    std::ostringstream body;
    highway::write_fit_json(body, fit);
    deliver(opt.out, body.str());
}

struct FramesOptions {
    int k = 0;
    std::string trials_text = "1000000";
    std::uint64_t seed = 1;
    std::string out;
};

void run_frames(const FramesOptions& opt) {
    if (opt.k < 0) throw InputError("--k must be >= 0");
    const auto trials = parse_count(opt.trials_text);
    if (trials < 1) throw InputError("--trials must be >= 1");
    const auto estimate = highway::estimate_frame_probability(opt.k, trials, highway::Seed{opt.seed});
    nlohmann::json j;
    j["k"] = opt.k;
    j["bound"] = highway::frame_probability_bound(opt.k);
    j["empirical"] = estimate.value;
    j["trials"] = estimate.trials;
    j["ci95"] = {estimate.ci_lo, estimate.ci_hi};
    j["seed"] = opt.seed;
    deliver(opt.out, j.dump(2) + "\n");
}

struct WorstcaseOptions {
    std::string n_text;
};

void run_worstcase(const WorstcaseOptions& opt) {
    const auto n = parse_count(opt.n_text);
    if (n < 3) throw InputError("--n must be >= 3 for the worst-case chain");
    // long double spreads the chain far beyond what double can hold.
    highway::BasicPointSet<long double> chain;
    try {
        chain = highway::exponential_chain<long double>(static_cast<std::size_t>(n), 0.5L);
    } catch (const std::domain_error& e) {
        throw InputError(e.what());
    }
    const auto profile = highway::interference_fast(chain);
    const auto expected = static_cast<std::int64_t>(n) - 2;
    const bool pass = profile.max == expected;
    std::cout << "n=" << n << " z_max=" << profile.max << " z_leftmost=" << profile.counts.front()
              << " expected=" << expected << ' ' << (pass ? "PASS" : "FAIL") << '\n';
    if (!pass) throw std::runtime_error("worst-case chain did not reach n-2");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"highway: broadcast interference of sensors on a line"};
    app.set_version_flag("--version", highway::kVersion);
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a points file");
    gen_cmd->add_option("--kind", gen.kind, "uniform|expgaps|chain|equal")
        ->check(CLI::IsMember({"uniform", "expgaps", "chain", "equal"}));
    gen_cmd->add_option("--n", gen.n_text, "number of points (accepts 2^k)")->required();
    gen_cmd->add_option("--seed", gen.seed, "master seed (default 1)");
    gen_cmd->add_option("--trial", gen.trial, "trial stream index (default 0)");
    gen_cmd->add_option("--ratio", gen.ratio, "chain gap ratio in (0,1)");
    gen_cmd->add_option("--out", gen.out, "output path (default stdout)");

    InterfereOptions interfere;
    auto* interfere_cmd = app.add_subcommand("interfere", "per-point interference profile");
    interfere_cmd->add_option("--in", interfere.in, "points file")->required();
    interfere_cmd->add_option("--algo", interfere.algo, "fast|naive")
        ->check(CLI::IsMember({"fast", "naive"}));
    interfere_cmd->add_option("--format", interfere.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    interfere_cmd->add_option("--out", interfere.out, "output path (default stdout)");

    SimulateOptions simulate;
    auto* simulate_cmd = app.add_subcommand("simulate", "per-n aggregates of max interference");
    simulate_cmd->add_option("--n-grid", simulate.n_grid_text, "comma list of n (accepts 2^k)")
        ->required();
    simulate_cmd->add_option("--trials", simulate.trials_text,
                             "trials per n: one count or a comma list matching the grid")
        ->required();
    simulate_cmd->add_option("--seed", simulate.seed, "master seed (default 1)");
    simulate_cmd->add_option("--generator", simulate.generator, "uniform|expgaps|chain|equal")
        ->check(CLI::IsMember({"uniform", "expgaps", "chain", "equal"}));
    simulate_cmd->add_option("--ratio", simulate.ratio, "chain gap ratio in (0,1)");
    simulate_cmd->add_option("--threads", simulate.threads, "worker cap (0 = hardware)");
    simulate_cmd->add_option("--format", simulate.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    simulate_cmd->add_option("--out", simulate.out, "output path (default stdout)");
    simulate_cmd->add_option("--per-trial-out", simulate.per_trial_out,
                             "also write per-trial z_max records");

    ScalingOptions scaling;
    auto* scaling_cmd = app.add_subcommand("scaling", "least-squares fit against sqrt(ln n)");
    scaling_cmd->add_option("--in", scaling.in, "aggregate csv from simulate")->required();
    scaling_cmd->add_option("--out", scaling.out, "output path (default stdout)");

    FramesOptions frames;
    auto* frames_cmd = app.add_subcommand("frames", "frame probability: bound vs Monte Carlo");
    frames_cmd->add_option("--k", frames.k, "frame order")->required();
    frames_cmd->add_option("--trials", frames.trials_text, "tuples to draw (accepts 10^k)");
    frames_cmd->add_option("--seed", frames.seed, "master seed (default 1)");
    frames_cmd->add_option("--out", frames.out, "output path (default stdout)");

    WorstcaseOptions worstcase;
    auto* worstcase_cmd = app.add_subcommand("worstcase", "ratio-1/2 chain sanity check");
    worstcase_cmd->add_option("--n", worstcase.n_text, "chain size, >= 3 (accepts 2^k)")
        ->required();

    try {
        app.parse(argc, argv);
        if (gen_cmd->parsed()) run_gen(gen);
        if (interfere_cmd->parsed()) run_interfere(interfere);
        if (simulate_cmd->parsed()) run_simulate(simulate);
        if (scaling_cmd->parsed()) run_scaling(scaling);
        if (frames_cmd->parsed()) run_frames(frames);
        if (worstcase_cmd->parsed()) run_worstcase(worstcase);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        // library precondition violations reached from flag values
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
