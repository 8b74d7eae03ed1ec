#pragma once

#include "mcde/rank_index.hpp"
#include "mcde/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mcde {

/// Rows selected by one random slice. `member[r] != 0` iff row r passed the
/// interval condition of every dimension other than `ref_dim`; the
/// complement sample is the set of rows with `member[r] == 0`.
struct SliceMask {
    std::vector<std::uint8_t> member;
    std::size_t ref_dim = 0;

    std::size_t count() const noexcept;
};

/// Rounds a count that is mathematically an integer-or-above, tolerating
/// binary floating-point error (e.g. 10 * 0.3).
std::size_t ceil_count(double x) noexcept;
std::size_t floor_count(double x) noexcept;

/// Rows each slicing condition keeps: ceil(n * alpha^(1/(d-1))), in [1, n].
/// Throws ArgumentError for d < 2, n < 1 or alpha outside (0, 1].
std::size_t slice_size(std::size_t n, std::size_t d, double alpha);

/// Draws a dimensionality-aware slice. For each dimension except `ref_dim`,
/// in increasing order, a start position is drawn uniformly from
/// [0, n - slice_size] and only the rows at sorted positions
/// [start, start + slice_size) keep their membership.
SliceMask draw_slice(const RankIndex& index, std::size_t ref_dim, double alpha, CounterRng& rng);

/// Same as above, reusing the storage of `mask`.
void draw_slice(const RankIndex& index, std::size_t ref_dim, double alpha, CounterRng& rng,
                SliceMask& mask);

}  // namespace mcde
