#include "mcde/cli.hpp"

#include "mcde/benchmark.hpp"
#include "mcde/contrast.hpp"
#include "mcde/dataset.hpp"
#include "mcde/error.hpp"
#include "mcde/generators.hpp"
#include "mcde/rank_index.hpp"
#include "mcde/stream_monitor.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

namespace mcde::cli {

namespace {

struct CsvFlags {
    bool no_header = false;
    std::string delimiter = ",";

    CsvOptions options() const { return {!no_header, delimiter.front()}; }
};

void add_csv_flags(CLI::App& cmd, CsvFlags& flags) {
    cmd.add_flag("--no-header", flags.no_header, "Input has no header row");
    cmd.add_option("--delimiter", flags.delimiter, "Field delimiter")
        ->check([](const std::string& s) {
            return s.size() == 1 ? std::string{} : std::string("delimiter must be one character");
        });
}

void add_threads(CLI::App& cmd, unsigned& threads) {
    cmd.add_option("--threads", threads, "Worker threads (0 = all cores); never changes results")
        ->envname("MCDE_THREADS");
}

CLI::Option* add_seed(CLI::App& cmd, std::uint64_t& seed) {
    return cmd.add_option("--seed", seed, "Random seed")->capture_default_str();
}

void note_default_seed(const CLI::Option* opt, std::uint64_t seed, std::ostream& err) {
    if (opt->count() == 0) err << "mcde: using default seed " << seed << '\n';
}

Dataset read_input(const std::string& input, const CsvOptions& csv, std::istream& in) {
    if (input == "-") return parse_csv(in, csv);
    return load_csv(input, csv);
}

std::vector<DependencyKind> parse_kinds(const std::vector<std::string>& names) {
    std::vector<DependencyKind> kinds;
    for (const auto& name : names) {
        if (name == "all") {
            kinds.insert(kinds.end(), kDependencies.begin(), kDependencies.end());
            kinds.push_back(DependencyKind::independent);
        } else {
            kinds.push_back(parse_dependency_kind(name));
        }
    }
    return kinds;
}

bool names_option(const std::string& arg, const std::string& flag) {
    return arg == flag || arg.rfind(flag + "=", 0) == 0;
}

// Splices the keys of a flat "key = value" file into the arguments as
// "--key=value", right where "--config FILE" appears. Options given on the
// command line win over the file.
std::vector<std::string> expand_config(std::span<const std::string> args) {
    std::vector<std::string> expanded;
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            expanded.push_back(args[i]);
            expanded.push_back(args[++i]);
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            expanded.push_back(args[i]);
        } else {
            expanded.push_back(args[i]);
            continue;
        }
        std::ifstream file(path);
        if (!file) throw DataError("cannot open config file '" + path + "'");
        for (const auto& item : CLI::ConfigTOML().from_config(file)) {
            if (!item.parents.empty() && item.parents != std::vector<std::string>{"default"}) {
                throw DataError("config file '" + path + "': sections are not supported");
            }
            const std::string flag = "--" + item.name;
            if (std::any_of(args.begin(), args.end(),
                            [&](const std::string& a) { return names_option(a, flag); })) {
                continue;
            }
            std::string value;
            for (const auto& input : item.inputs) value += (value.empty() ? "" : ",") + input;
            expanded.push_back(flag + "=" + value);
        }
    }
    return expanded;
}

std::string kind_names() {
    std::string s;
    for (auto kind : kDependencies) s += std::string(to_string(kind)) + ", ";
    return s + "independent";
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Monte Carlo dependency estimation with the Mann-Whitney P estimator", "mcde"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    // estimate
    auto* estimate = app.add_subcommand("estimate", "Estimate the MWP contrast of a subspace");
    std::string est_input;
    std::vector<std::size_t> est_dims;
    ContrastOptions est;
    est.threads = 0;
    bool est_full = false;
    bool est_per_iteration = false;
    CsvFlags est_csv;
    estimate->add_option("--input", est_input, "CSV file, or - for standard input")->required();
    estimate->add_option("--dims", est_dims, "Column indices of the subspace (default: all)")
        ->delimiter(',');
    estimate->add_option("--m", est.iterations, "Monte Carlo iterations")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    estimate->add_option("--alpha", est.alpha, "Expected slice fraction")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    auto* est_seed = add_seed(*estimate, est.seed);
    add_threads(*estimate, est.threads);
    estimate->add_flag("--full-precision", est_full, "Print round-trip exact numbers");
    estimate->add_flag("--per-iteration", est_per_iteration,
                       "Also print every iteration's p_c, one per line");
    add_csv_flags(*estimate, est_csv);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a synthetic dependency as CSV");
    DependencySpec spec;
    spec.seed = kDefaultSeed;
    std::string gen_kind = "linear";
    std::optional<std::size_t> gen_omega;
    gen->add_option("--kind", gen_kind, "One of: " + kind_names())->capture_default_str();
    gen->add_option("--n", spec.n, "Rows")->capture_default_str()->check(CLI::PositiveNumber);
    gen->add_option("--d", spec.d, "Dimensions")->capture_default_str()->check(CLI::PositiveNumber);
    gen->add_option("--noise", spec.noise_level, "Gaussian noise standard deviation")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--omega", gen_omega, "Discretise to this many levels after noising")
        ->check(CLI::PositiveNumber);
    auto* gen_seed = add_seed(*gen, spec.seed);

    // benchmark
    auto* bench = app.add_subcommand("benchmark", "Power, score distribution, robustness, runtime");
    bench->require_subcommand(1);
    BenchmarkConfig cfg;
    cfg.threads = 0;
    bool bench_full = false;
    std::vector<std::string> bench_kinds = {"all"};
    std::vector<double> bench_noise;
    std::size_t noise_grid_levels = 30;
    std::vector<std::size_t> omegas = {100, 50, 20, 10, 5, 3, 2, 1};
    std::vector<std::size_t> n_values = {1000, 10000, 100000};
    std::vector<std::size_t> d_values = {2, 3, 5, 10};
    std::size_t runtime_reps = 10;

    auto common = [&](CLI::App& cmd) {
        cmd.add_option("--config", "Flat key = value file with options of this command");
        cmd.add_option("--n", cfg.n, "Rows per instance")->capture_default_str();
        cmd.add_option("--d", cfg.d, "Dimensions per instance")->capture_default_str();
        cmd.add_option("--m", cfg.m, "Monte Carlo iterations")->capture_default_str();
        cmd.add_option("--alpha", cfg.alpha, "Expected slice fraction")->capture_default_str();
        cmd.add_flag("--full-precision", bench_full, "Print round-trip exact numbers");
        add_threads(cmd, cfg.threads);
    };
    auto scored = [&](CLI::App& cmd) {
        common(cmd);
        cmd.add_option("--gamma", cfg.gamma, "Percentile of independence scores")
            ->capture_default_str();
        cmd.add_option("--reps", cfg.reps, "Instances per cell")->capture_default_str();
        cmd.add_option("--noise", bench_noise, "Explicit noise levels (overrides --noise-grid)")
            ->delimiter(',');
        cmd.add_option("--noise-grid", noise_grid_levels, "Linear noise levels over [0, 1]")
            ->capture_default_str();
    };

    std::uint64_t bench_seed_value = cfg.seed;
    std::vector<CLI::Option*> bench_seeds;
    auto* power_cmd = bench->add_subcommand("power", "Statistical power against independence");
    scored(*power_cmd);
    power_cmd->add_option("--kinds", bench_kinds, "Dependencies, or 'all'")->delimiter(',');
    bench_seeds.push_back(add_seed(*power_cmd, bench_seed_value));

    auto* dist_cmd = bench->add_subcommand("distribution", "Score mean and std per dependency");
    scored(*dist_cmd);
    dist_cmd->add_option("--kinds", bench_kinds, "Dependencies, or 'all'")->delimiter(',');
    bench_seeds.push_back(add_seed(*dist_cmd, bench_seed_value));

    auto* robust_cmd = bench->add_subcommand("robustness", "Power under discretisation");
    scored(*robust_cmd);
    robust_cmd->add_option("--omegas", omegas, "Discretisation levels")
        ->delimiter(',')
        ->capture_default_str();
    bench_seeds.push_back(add_seed(*robust_cmd, bench_seed_value));

    auto* runtime_cmd = bench->add_subcommand("runtime", "Median timings per (n, d)");
    common(*runtime_cmd);
    runtime_cmd->add_option("--reps", runtime_reps, "Timed runs per cell")->capture_default_str();
    runtime_cmd->add_option("--n-values", n_values, "Row counts")->delimiter(',')->capture_default_str();
    runtime_cmd->add_option("--d-values", d_values, "Dimensions")->delimiter(',')->capture_default_str();
    bench_seeds.push_back(add_seed(*runtime_cmd, bench_seed_value));

    // monitor
    auto* mon = app.add_subcommand("monitor", "Sliding-window contrast over a CSV stream");
    WindowConfig window;
    window.threads = 0;
    std::string mon_input = "-";
    MonitorOptions mon_opts;
    CsvFlags mon_csv;
    bool mon_drift = false;
    DriftRule drift_rule;
    mon->add_option("--input", mon_input, "CSV file, or - for standard input")->capture_default_str();
    mon->add_option("--width", window.width, "Window width in rows")->capture_default_str();
    mon->add_option("--step", window.step, "Rows between evaluations")->capture_default_str();
    mon->add_option("--dims", window.dims, "Monitored column indices")
        ->delimiter(',')
        ->capture_default_str();
    mon->add_option("--m", window.m, "Monte Carlo iterations")->capture_default_str();
    mon->add_option("--alpha", window.alpha, "Expected slice fraction")->capture_default_str();
    auto* mon_seed = add_seed(*mon, window.seed);
    add_threads(*mon, window.threads);
    mon->add_flag("--strict", mon_opts.strict, "Abort on the first malformed row");
    mon->add_flag("--full-precision", mon_opts.full_precision, "Print round-trip exact numbers");
    mon->add_flag("--drift", mon_drift, "Append a drift flag column (heuristic)");
    mon->add_option("--drift-threshold", drift_rule.threshold, "Score below which a window counts")
        ->capture_default_str();
    mon->add_option("--drift-windows", drift_rule.consecutive,
                    "Consecutive low windows before flagging")
        ->capture_default_str();
    add_csv_flags(*mon, mon_csv);

    try {
        const auto expanded = expand_config(args);
        std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const DataError& e) {
        err << "mcde: " << e.what() << '\n';
        return kExitData;
    }

    try {
        if (*estimate) {
            note_default_seed(est_seed, est.seed, err);
            Dataset ds = read_input(est_input, est_csv.options(), in);
            if (!est_dims.empty()) ds = select_subspace(ds, est_dims);
            est.record_iterations = est_per_iteration;
            const auto result = contrast(ds, est);
            out << format_number(result.score, est_full) << '\n';
            if (result.per_iteration) {
                for (double p : *result.per_iteration) out << format_number(p, est_full) << '\n';
            }
        } else if (*gen) {
            note_default_seed(gen_seed, spec.seed, err);
            spec.kind = parse_dependency_kind(gen_kind);
            Dataset ds = generate(spec);
            if (gen_omega) ds = discretise(ds, *gen_omega);
            write_csv(out, ds);
        } else if (*bench) {
            cfg.seed = bench_seed_value;
            const bool seeded = std::any_of(bench_seeds.begin(), bench_seeds.end(),
                                            [](const CLI::Option* o) { return o->count() > 0; });
            if (!seeded) err << "mcde: using default seed " << cfg.seed << '\n';
            const auto noise = bench_noise.empty() ? noise_grid(noise_grid_levels) : bench_noise;
            if (*power_cmd) {
                const auto rows = power_sweep(parse_kinds(bench_kinds), noise, cfg);
                write_results_csv(out, rows, bench_full);
            } else if (*dist_cmd) {
                const auto rows = distribution_sweep(parse_kinds(bench_kinds), noise, cfg);
                write_results_csv(out, rows, bench_full);
            } else if (*robust_cmd) {
                const auto rows = robustness_sweep(omegas, noise, cfg);
                write_results_csv(out, rows, bench_full);
            } else {
                BenchmarkConfig timing = cfg;
                timing.reps = runtime_reps;
                const auto rows = runtime_profile(n_values, d_values, timing);
                write_timing_csv(out, rows, bench_full);
            }
        } else if (*mon) {
            note_default_seed(mon_seed, window.seed, err);
            mon_opts.csv = mon_csv.options();
            if (mon_drift) mon_opts.drift = drift_rule;
            if (mon_input == "-") {
                run_monitor(in, out, err, window, mon_opts);
            } else {
                std::ifstream file(mon_input, std::ios::binary);
                if (!file) throw DataError("cannot open '" + mon_input + "'");
                run_monitor(file, out, err, window, mon_opts);
            }
        }
    } catch (const DataError& e) {
        err << "mcde: " << e.what() << '\n';
        return kExitData;
    } catch (const ArgumentError& e) {
        err << "mcde: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace mcde::cli
