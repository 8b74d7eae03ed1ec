#pragma once

// Reference implementations used only by tests. They deliberately avoid the
// library's code paths: quadratic rank counting instead of sorting, 1-based
// textbook U statistics, and erfc instead of erf.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace oracle {

/// 0-based average ranks by counting: #{smaller} + (#{equal} - 1) / 2.
inline std::vector<double> average_ranks(std::span<const double> values) {
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::size_t smaller = 0;
        std::size_t equal = 0;
        for (double v : values) {
            if (v < values[i]) ++smaller;
            if (v == values[i]) ++equal;
        }
        ranks[i] = static_cast<double>(smaller) + (static_cast<double>(equal) - 1.0) / 2.0;
    }
    return ranks;
}

/// Sum over tie groups of t^3 - t; each member of a group of size t adds t^2 - 1.
inline double tie_sum(std::span<const double> values) {
    double total = 0.0;
    for (double x : values) {
        double equal = 0.0;
        for (double v : values) equal += (v == x) ? 1.0 : 0.0;
        total += equal * equal - 1.0;
    }
    return total;
}

/// Cumulative tie sum of the groups whose value is <= x.
inline double tie_sum_up_to(std::span<const double> values, double x) {
    double total = 0.0;
    for (double y : values) {
        if (y > x) continue;
        double equal = 0.0;
        for (double v : values) equal += (v == y) ? 1.0 : 0.0;
        total += equal * equal - 1.0;
    }
    return total;
}

/// Two-sided Mann-Whitney confidence 1 - p with the tie-corrected normal
/// approximation, from two raw samples. Returns 0 when every pooled value
/// ties (no rank information), otherwise 1 when a sample is empty.
inline double mann_whitney_confidence(std::span<const double> first,
                                      std::span<const double> second) {
    std::vector<double> pooled(first.begin(), first.end());
    pooled.insert(pooled.end(), second.begin(), second.end());
    const bool all_tied = std::all_of(pooled.begin(), pooled.end(),
                                      [&](double v) { return v == pooled.front(); });
    if (pooled.size() >= 2 && all_tied) return 0.0;
    if (first.empty() || second.empty()) return 1.0;
    const double n = static_cast<double>(pooled.size());
    const double n1 = static_cast<double>(first.size());
    const double n2 = static_cast<double>(second.size());

    const auto ranks0 = average_ranks(pooled);
    double r1 = 0.0;  // 1-based rank sum of the first sample
    for (std::size_t i = 0; i < first.size(); ++i) r1 += ranks0[i] + 1.0;

    const double u1 = r1 - n1 * (n1 + 1.0) / 2.0;
    const double mu = n1 * n2 / 2.0;
    const double ties = tie_sum(pooled);
    const double var = n1 * n2 / 12.0 * ((n + 1.0) - ties / (n * (n - 1.0)));
    if (var <= 1e-12) return 0.0;
    const double z = std::abs(u1 - mu) / std::sqrt(var);
    const double p = std::erfc(z / std::sqrt(2.0));  // two-sided p-value
    return 1.0 - p;
}

}  // namespace oracle
