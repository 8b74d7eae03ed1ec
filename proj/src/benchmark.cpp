#include "mcde/benchmark.hpp"

#include "mcde/contrast.hpp"
#include "mcde/error.hpp"
#include "mcde/parallel.hpp"
#include "mcde/rank_index.hpp"
#include "mcde/rng.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <ostream>

namespace mcde {

namespace {

// Stream tag for the independence instances behind thresholds; cell seeds
// are derived from kind indices below this value.
constexpr std::uint64_t kThresholdTag = 0xffffffffULL;

void validate(const BenchmarkConfig& cfg) {
    if (cfg.reps < 1) throw ArgumentError("reps must be at least 1");
    if (!(cfg.gamma > 0.0 && cfg.gamma < 100.0)) throw ArgumentError("gamma must lie in (0, 100)");
    if (cfg.m < 1) throw ArgumentError("m must be at least 1");
    if (cfg.d < 2) throw ArgumentError("d must be at least 2");
    if (cfg.n < 2) throw ArgumentError("n must be at least 2");
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
        .count();
}

PowerResult make_row(DependencyKind kind, double noise, std::optional<std::size_t> omega,
                     const BenchmarkConfig& cfg, std::span<const double> scores) {
    const auto summary = summarize(scores);
    PowerResult row;
    row.kind = kind;
    row.noise_level = noise;
    row.omega = omega;
    row.n = cfg.n;
    row.d = cfg.d;
    row.m = cfg.m;
    row.gamma = cfg.gamma;
    row.reps = cfg.reps;
    row.mean = summary.mean;
    row.std = summary.std;
    row.seed = cfg.seed;
    return row;
}

}  // namespace

ScoreSummary summarize(std::span<const double> scores) {
    ScoreSummary s;
    if (scores.empty()) {
        s.degenerate = true;
        return s;
    }
    double sum = 0.0;
    for (double v : scores) sum += v;
    s.mean = sum / static_cast<double>(scores.size());
    if (scores.size() < 2) {
        s.degenerate = true;
        return s;
    }
    double ss = 0.0;
    for (double v : scores) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(scores.size() - 1));
    return s;
}

double nearest_rank_percentile(std::span<const double> scores, double gamma) {
    if (scores.empty()) throw ArgumentError("percentile of an empty sample");
    if (!(gamma > 0.0 && gamma <= 100.0)) throw ArgumentError("gamma must lie in (0, 100]");
    std::vector<double> sorted(scores.begin(), scores.end());
    std::sort(sorted.begin(), sorted.end());
    const double exact = gamma / 100.0 * static_cast<double>(sorted.size());
    // Guard against 0.95 * 100 landing a hair above 95.
    std::size_t rank = static_cast<std::size_t>(std::ceil(exact - 1e-9));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    return sorted[rank - 1];
}

double power_from_scores(std::span<const double> scores, double threshold) {
    if (scores.empty()) throw ArgumentError("power of an empty sample");
    const auto above = std::count_if(scores.begin(), scores.end(),
                                     [threshold](double s) { return s > threshold; });
    return static_cast<double>(above) / static_cast<double>(scores.size());
}

std::uint64_t cell_seed(std::uint64_t seed, DependencyKind kind, double noise,
                        std::optional<std::size_t> omega) {
    std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(kind));
    s = derive_seed(s, std::bit_cast<std::uint64_t>(noise));
    return derive_seed(s, omega.value_or(0));
}

std::vector<double> score_instances(DependencyKind kind, double noise,
                                    std::optional<std::size_t> omega,
                                    const BenchmarkConfig& cfg, std::uint64_t stream_seed) {
    validate(cfg);
    std::vector<double> scores(cfg.reps);
    ContrastOptions options;
    options.iterations = cfg.m;
    options.alpha = cfg.alpha;
    parallel_for(cfg.reps, cfg.threads, [&](std::size_t i, unsigned) {
        DependencySpec spec;
        spec.kind = kind;
        spec.n = cfg.n;
        spec.d = cfg.d;
        spec.noise_level = noise;
        spec.seed = derive_seed(stream_seed, 2 * i);
        Dataset data = generate(spec);
        if (omega) data = discretise(data, *omega);
        ContrastOptions local = options;
        local.seed = derive_seed(stream_seed, 2 * i + 1);
        scores[i] = contrast(data, local).score;
    });
    return scores;
}

std::vector<double> independence_scores(const BenchmarkConfig& cfg) {
    return score_instances(DependencyKind::independent, 0.0, std::nullopt, cfg,
                           derive_seed(cfg.seed, kThresholdTag));
}

double independence_threshold(const BenchmarkConfig& cfg) {
    return nearest_rank_percentile(independence_scores(cfg), cfg.gamma);
}

PowerResult power(DependencyKind kind, double noise, const BenchmarkConfig& cfg,
                  double threshold, std::optional<std::size_t> omega) {
    const auto scores = score_instances(kind, noise, omega, cfg, cell_seed(cfg.seed, kind, noise, omega));
    PowerResult row = make_row(kind, noise, omega, cfg, scores);
    row.threshold = threshold;
    row.power = power_from_scores(scores, threshold);
    return row;
}

ScoreSummary score_distribution(DependencyKind kind, double noise, const BenchmarkConfig& cfg) {
    const auto scores =
        score_instances(kind, noise, std::nullopt, cfg, cell_seed(cfg.seed, kind, noise, std::nullopt));
    return summarize(scores);
}

std::vector<PowerResult> power_sweep(std::span<const DependencyKind> kinds,
                                     std::span<const double> noise_levels,
                                     const BenchmarkConfig& cfg) {
    const double threshold = independence_threshold(cfg);
    std::vector<PowerResult> rows;
    for (auto kind : kinds) {
        for (double noise : noise_levels) rows.push_back(power(kind, noise, cfg, threshold));
    }
    return rows;
}

std::vector<PowerResult> distribution_sweep(std::span<const DependencyKind> kinds,
                                            std::span<const double> noise_levels,
                                            const BenchmarkConfig& cfg) {
    std::vector<PowerResult> rows;
    for (auto kind : kinds) {
        for (double noise : noise_levels) {
            const auto scores = score_instances(kind, noise, std::nullopt, cfg,
                                                cell_seed(cfg.seed, kind, noise, std::nullopt));
            rows.push_back(make_row(kind, noise, std::nullopt, cfg, scores));
        }
    }
    return rows;
}

std::vector<PowerResult> robustness_sweep(std::span<const std::size_t> omega_levels,
                                          std::span<const double> noise_levels,
                                          const BenchmarkConfig& cfg) {
    const double threshold = independence_threshold(cfg);
    std::vector<PowerResult> rows;
    for (auto kind : {DependencyKind::linear, DependencyKind::independent}) {
        for (auto omega : omega_levels) {
            for (double noise : noise_levels) {
                rows.push_back(power(kind, noise, cfg, threshold, omega));
            }
        }
    }
    return rows;
}

std::vector<TimingRow> runtime_profile(std::span<const std::size_t> n_values,
                                       std::span<const std::size_t> d_values,
                                       const BenchmarkConfig& cfg) {
    if (cfg.reps < 1) throw ArgumentError("reps must be at least 1");
    std::vector<TimingRow> rows;
    for (auto n : n_values) {
        for (auto d : d_values) {
            DependencySpec spec;
            spec.n = n;
            spec.d = d;
            spec.seed = derive_seed(cfg.seed, n * 1000 + d);
            const Dataset data = generate(spec);
            ContrastOptions options;
            options.iterations = cfg.m;
            options.alpha = cfg.alpha;
            options.seed = cfg.seed;

            {  // warm-up
                const RankIndex index(data);
                (void)contrast(index, options);
            }
            std::vector<double> index_ms;
            std::vector<double> contrast_ms;
            std::vector<double> total_ms;
            for (std::size_t r = 0; r < cfg.reps; ++r) {
                options.seed = derive_seed(cfg.seed, r);
                auto t0 = std::chrono::steady_clock::now();
                const RankIndex index(data);
                index_ms.push_back(elapsed_ms(t0));

                t0 = std::chrono::steady_clock::now();
                (void)contrast(index, options);
                contrast_ms.push_back(elapsed_ms(t0));

                t0 = std::chrono::steady_clock::now();
                (void)contrast(data, options);
                total_ms.push_back(elapsed_ms(t0));
            }
            rows.push_back({n, d, cfg.m, cfg.reps, median(index_ms), median(contrast_ms),
                            median(total_ms)});
        }
    }
    return rows;
}

void write_results_csv(std::ostream& out, std::span<const PowerResult> rows, bool full_precision) {
    out << "kind,noise,omega,n,d,m,gamma,reps,mean,std,threshold,power,seed\n";
    for (const auto& r : rows) {
        out << to_string(r.kind) << ',' << format_number(r.noise_level, full_precision) << ',';
        if (r.omega) out << *r.omega;
        out << ',' << r.n << ',' << r.d << ',' << r.m << ','
            << format_number(r.gamma, full_precision) << ',' << r.reps << ','
            << format_number(r.mean, full_precision) << ','
            << format_number(r.std, full_precision) << ',';
        if (r.threshold) out << format_number(*r.threshold, full_precision);
        out << ',';
        if (r.power) out << format_number(*r.power, full_precision);
        out << ',' << r.seed << '\n';
    }
}

void write_timing_csv(std::ostream& out, std::span<const TimingRow> rows, bool full_precision) {
    out << "n,d,m,reps,index_ms,contrast_ms,total_ms\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.d << ',' << r.m << ',' << r.reps << ','
            << format_number(r.index_ms, full_precision) << ','
            << format_number(r.contrast_ms, full_precision) << ','
            << format_number(r.total_ms, full_precision) << '\n';
    }
}

}  // namespace mcde
