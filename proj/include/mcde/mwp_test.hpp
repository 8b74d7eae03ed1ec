#pragma once

#include "mcde/rank_index.hpp"
#include "mcde/rng.hpp"
#include "mcde/slicer.hpp"

#include <cstddef>
#include <cstdint>
#include <span>

namespace mcde {

/// 2 * Phi(z) - 1, the cdf of |Z| for standard normal Z. Throws for z < 0.
double half_normal_cdf(double z);

struct TestOutcome {
    double p_c = 1.0;          ///< confidence level 1 - p of the two-sided test
    std::size_t n1 = 0;        ///< slice members inside the restriction
    std::size_t n_prime = 0;   ///< restriction width
    bool degenerate = false;   ///< empty/full slice or fully tied window
};

/// Half-open range of sorted positions on the reference dimension.
struct Restriction {
    std::size_t start = 0;
    std::size_t end = 0;
};

/// start ~ U{0, ..., floor(n (1 - alpha))}, end = min(start + ceil(n alpha), n).
Restriction draw_restriction(std::size_t n, double alpha, CounterRng& rng);

/// Two-sided Mann-Whitney test between slice members and non-members whose
/// reference values fall in sorted positions [window.start, window.end).
///
/// Ranks and tie corrections are those of the window itself: tie groups
/// cut by a window edge contribute only their in-window part. When no group
/// is cut this is exactly the rank sum of the index's adjusted ranks shifted
/// by `start`, with the correction b[end-1] - b[start-1].
///
/// A fully tied window carries no rank information and yields p_c = 0.
/// Otherwise an empty or full slice (n1 = 0 or n1 = n') yields p_c = 1.
TestOutcome mwp_test_window(const DimensionIndex& ref, std::span<const std::uint8_t> member,
                            Restriction window);

/// Draws a marginal restriction on `ref_dim` and runs the test against `mask`.
TestOutcome mwp_test(const RankIndex& index, const SliceMask& mask, std::size_t ref_dim,
                     double alpha, CounterRng& rng);

}  // namespace mcde
