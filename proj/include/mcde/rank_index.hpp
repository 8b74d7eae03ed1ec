#pragma once

#include "mcde/dataset.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace mcde {

/// Sorted view of one attribute.
///
/// Position j of the three arrays describes the j-th smallest value:
///  - `row_ids[j]` is the row holding it,
///  - `adjusted_ranks[j]` its 0-based rank, averaged over its tie group,
///  - `cum_corrections[j]` the running sum of t^3 - t over all tie groups up
///    to and including the group that contains position j.
///
/// Adjusted ranks strictly increase between tie groups and are equal inside
/// one, so `adjusted_ranks[j] == adjusted_ranks[j + 1]` iff j and j + 1 tie.
struct DimensionIndex {
    std::vector<std::uint32_t> row_ids;
    std::vector<double> adjusted_ranks;
    std::vector<double> cum_corrections;

    std::size_t size() const noexcept { return row_ids.size(); }

    /// Correction accumulated strictly before `position` (virtual b[-1] = 0).
    double correction_before(std::size_t position) const noexcept {
        return position == 0 ? 0.0 : cum_corrections[position - 1];
    }
};

/// Builds the index of one column. Ties are detected by exact equality.
/// Row order inside a tie group is a deterministic function of the column's
/// content, uncorrelated across columns.
DimensionIndex index_column(std::span<const double> column);

/// One DimensionIndex per attribute. Cheap to copy and project: dimensions
/// are shared, immutable, and safe to read concurrently.
class RankIndex {
public:
    /// Indexes every column of `ds`, using up to `threads` workers
    /// (0 = hardware concurrency).
    explicit RankIndex(const Dataset& ds, unsigned threads = 1);

    std::size_t rows() const noexcept { return n_; }
    std::size_t dims() const noexcept { return dims_.size(); }
    const DimensionIndex& dim(std::size_t j) const;

    /// Index of the subspace `dims` (distinct, in range), reusing the
    /// per-dimension structures without copying them.
    RankIndex project(std::span<const std::size_t> dims) const;

private:
    RankIndex() = default;

    std::size_t n_ = 0;
    std::vector<std::shared_ptr<const DimensionIndex>> dims_;
};

inline RankIndex construct_index(const Dataset& ds, unsigned threads = 1) {
    return RankIndex(ds, threads);
}

}  // namespace mcde
