#pragma once

#include "mcde/dataset.hpp"
#include "mcde/rank_index.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace mcde {

inline constexpr std::size_t kDefaultIterations = 50;
inline constexpr double kDefaultAlpha = 0.5;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct ContrastOptions {
    std::size_t iterations = kDefaultIterations;
    double alpha = kDefaultAlpha;
    std::uint64_t seed = kDefaultSeed;
    /// Worker cap; 0 = hardware concurrency. Never changes the result.
    unsigned threads = 1;
    /// Keep every iteration's p_c in the estimate.
    bool record_iterations = false;
};

struct ContrastEstimate {
    double score = 0.0;
    std::size_t iterations = 0;
    double alpha = kDefaultAlpha;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::vector<double>> per_iteration;
};

/// Monte Carlo estimate of the contrast of the subspace spanned by every
/// dimension of `index`: the mean p_c over `iterations` draws of a
/// reference dimension, slice and marginal restriction.
///
/// Iteration m consumes only CounterRng(seed, m), and the mean is summed in
/// iteration order, so the score is bit-identical for any thread count.
ContrastEstimate contrast(const RankIndex& index, const ContrastOptions& options = {});

/// Indexes `ds` and estimates its contrast.
ContrastEstimate contrast(const Dataset& ds, const ContrastOptions& options = {});

/// p_c of a single Monte Carlo iteration.
double contrast_iteration(const RankIndex& index, double alpha, std::uint64_t seed,
                          std::size_t iteration);

/// Hoeffding bound on P(|estimate - contrast| >= epsilon) after m
/// iterations: min(1, 2 exp(-2 m epsilon^2)).
double hoeffding_bound(std::size_t m, double epsilon);

/// Smallest m whose Hoeffding bound at `epsilon` is at most `delta`.
std::size_t iterations_for(double epsilon, double delta);

}  // namespace mcde
