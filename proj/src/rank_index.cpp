#include "mcde/rank_index.hpp"

#include "mcde/error.hpp"
#include "mcde/parallel.hpp"
#include "mcde/rng.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_set>

namespace mcde {

namespace {

struct Entry {
    double value;
    std::uint32_t row;
};

std::uint64_t content_salt(std::span<const double> column) {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (double v : column) h = mix64(h ^ std::bit_cast<std::uint64_t>(v));
    return h;
}

}  // namespace

DimensionIndex index_column(std::span<const double> column) {
    const std::size_t n = column.size();
    if (n > std::numeric_limits<std::uint32_t>::max()) {
        throw ArgumentError("column too long to index");
    }

    std::vector<Entry> sorted(n);
    for (std::size_t i = 0; i < n; ++i) sorted[i] = {column[i], static_cast<std::uint32_t>(i)};
    std::sort(sorted.begin(), sorted.end(),
              [](const Entry& x, const Entry& y) { return x.value < y.value; });

    DimensionIndex out;
    out.row_ids.resize(n);
    out.adjusted_ranks.resize(n);
    out.cum_corrections.resize(n);

    std::uint64_t salt = 0;
    bool salted = false;
    double correction = 0.0;
    std::size_t j = 0;
    while (j < n) {
        std::size_t k = j;
        while (k + 1 < n && sorted[k + 1].value == sorted[j].value) ++k;
        const std::size_t t = k - j + 1;
        if (t > 1) {
            if (!salted) {
                salt = content_salt(column);
                salted = true;
            }
            std::sort(sorted.begin() + j, sorted.begin() + k + 1,
                      [salt](const Entry& x, const Entry& y) {
                          return mix64(salt ^ x.row) < mix64(salt ^ y.row);
                      });
            const double td = static_cast<double>(t);
            correction += td * td * td - td;
            const double adjusted = 0.5 * static_cast<double>(j + k);
            for (std::size_t m = j; m <= k; ++m) {
                out.row_ids[m] = sorted[m].row;
                out.adjusted_ranks[m] = adjusted;
                out.cum_corrections[m] = correction;
            }
        } else {
            out.row_ids[j] = sorted[j].row;
            out.adjusted_ranks[j] = static_cast<double>(j);
            out.cum_corrections[j] = correction;
        }
        j = k + 1;
    }
    return out;
}

RankIndex::RankIndex(const Dataset& ds, unsigned threads) : n_(ds.rows()) {
    std::vector<std::shared_ptr<const DimensionIndex>> dims(ds.cols());
    parallel_for(ds.cols(), threads, [&](std::size_t j, unsigned) {
        dims[j] = std::make_shared<const DimensionIndex>(index_column(ds.column(j)));
    });
    dims_ = std::move(dims);
}

const DimensionIndex& RankIndex::dim(std::size_t j) const {
    if (j >= dims_.size()) throw ArgumentError("dimension " + std::to_string(j) + " out of range");
    return *dims_[j];
}

RankIndex RankIndex::project(std::span<const std::size_t> dims) const {
    if (dims.empty()) throw ArgumentError("subspace must contain at least one dimension");
    std::unordered_set<std::size_t> seen;
    RankIndex out;
    out.n_ = n_;
    for (auto j : dims) {
        if (j >= dims_.size()) {
            throw ArgumentError("dimension " + std::to_string(j) + " out of range [0, " +
                                std::to_string(dims_.size()) + ")");
        }
        if (!seen.insert(j).second) {
            throw ArgumentError("dimension " + std::to_string(j) + " listed twice");
        }
        out.dims_.push_back(dims_[j]);
    }
    return out;
}

}  // namespace mcde
