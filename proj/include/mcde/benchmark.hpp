#pragma once

#include "mcde/generators.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace mcde {

struct BenchmarkConfig {
    std::size_t n = 1000;
    std::size_t d = 3;
    std::size_t m = 50;
    double alpha = 0.5;
    double gamma = 95.0;
    std::size_t reps = 500;
    std::uint64_t seed = 42;
    unsigned threads = 1;  ///< instances scored concurrently; results do not depend on it
};

struct ScoreSummary {
    double mean = 0.0;
    double std = 0.0;      ///< sample standard deviation (n - 1 denominator)
    bool degenerate = false;  ///< fewer than two scores; std is 0 by convention
};

/// One row of the long-form result table.
struct PowerResult {
    DependencyKind kind = DependencyKind::independent;
    double noise_level = 0.0;
    std::optional<std::size_t> omega;  ///< discretisation level, if any
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t m = 0;
    double gamma = 95.0;
    std::size_t reps = 0;
    double mean = 0.0;
    double std = 0.0;
    std::optional<double> threshold;
    std::optional<double> power;
    std::uint64_t seed = 0;
};

struct TimingRow {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t m = 0;
    std::size_t reps = 0;
    double index_ms = 0.0;     ///< median index construction time
    double contrast_ms = 0.0;  ///< median contrast time on a prebuilt index
    double total_ms = 0.0;     ///< median of index + contrast measured together
};

ScoreSummary summarize(std::span<const double> scores);

/// Nearest-rank percentile: the ceil(gamma/100 * N)-th smallest value.
double nearest_rank_percentile(std::span<const double> scores, double gamma);

/// Fraction of scores strictly greater than `threshold`.
double power_from_scores(std::span<const double> scores, double threshold);

/// Scores cfg.reps fresh instances of (kind, noise), optionally discretised
/// to `omega` levels. Instance i depends only on (stream_seed, i).
std::vector<double> score_instances(DependencyKind kind, double noise,
                                    std::optional<std::size_t> omega,
                                    const BenchmarkConfig& cfg, std::uint64_t stream_seed);

/// Seed of the instance stream for one benchmark cell.
std::uint64_t cell_seed(std::uint64_t seed, DependencyKind kind, double noise,
                        std::optional<std::size_t> omega);

/// Scores of noiseless independence instances used for thresholds. The
/// stream is disjoint from every cell_seed stream.
std::vector<double> independence_scores(const BenchmarkConfig& cfg);

/// gamma-th percentile of the independence scores.
double independence_threshold(const BenchmarkConfig& cfg);

PowerResult power(DependencyKind kind, double noise, const BenchmarkConfig& cfg,
                  double threshold, std::optional<std::size_t> omega = std::nullopt);

ScoreSummary score_distribution(DependencyKind kind, double noise, const BenchmarkConfig& cfg);

/// Power of every (kind, noise) pair against one shared independence threshold.
std::vector<PowerResult> power_sweep(std::span<const DependencyKind> kinds,
                                     std::span<const double> noise_levels,
                                     const BenchmarkConfig& cfg);

/// Mean and std for every (kind, noise) pair; no threshold or power.
std::vector<PowerResult> distribution_sweep(std::span<const DependencyKind> kinds,
                                            std::span<const double> noise_levels,
                                            const BenchmarkConfig& cfg);

/// Linear and independence data, noised and then discretised to each omega,
/// scored against the threshold of continuous noiseless independence.
std::vector<PowerResult> robustness_sweep(std::span<const std::size_t> omega_levels,
                                          std::span<const double> noise_levels,
                                          const BenchmarkConfig& cfg);

/// Median wall-clock timings per (n, d) on independence data, single
/// threaded, after one untimed warm-up run.
std::vector<TimingRow> runtime_profile(std::span<const std::size_t> n_values,
                                       std::span<const std::size_t> d_values,
                                       const BenchmarkConfig& cfg);

/// Header: kind,noise,omega,n,d,m,gamma,reps,mean,std,threshold,power,seed
void write_results_csv(std::ostream& out, std::span<const PowerResult> rows,
                       bool full_precision = false);

/// Header: n,d,m,reps,index_ms,contrast_ms,total_ms
void write_timing_csv(std::ostream& out, std::span<const TimingRow> rows,
                      bool full_precision = false);

}  // namespace mcde
