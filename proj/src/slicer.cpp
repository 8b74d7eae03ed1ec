#include "mcde/slicer.hpp"

#include "mcde/error.hpp"

#include <algorithm>
#include <cmath>

namespace mcde {

namespace {
constexpr double kCountSlack = 1e-9;
}

std::size_t SliceMask::count() const noexcept {
    return static_cast<std::size_t>(std::count(member.begin(), member.end(), std::uint8_t{1}));
}

std::size_t ceil_count(double x) noexcept {
    return static_cast<std::size_t>(std::max(0.0, std::ceil(x - kCountSlack)));
}

std::size_t floor_count(double x) noexcept {
    return static_cast<std::size_t>(std::max(0.0, std::floor(x + kCountSlack)));
}

std::size_t slice_size(std::size_t n, std::size_t d, double alpha) {
    if (d < 2) throw ArgumentError("slicing needs at least 2 dimensions");
    if (n < 1) throw ArgumentError("slicing needs at least one row");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ArgumentError("alpha must lie in (0, 1]");
    const double fraction = std::pow(alpha, 1.0 / static_cast<double>(d - 1));
    return std::clamp<std::size_t>(ceil_count(static_cast<double>(n) * fraction), 1, n);
}

void draw_slice(const RankIndex& index, std::size_t ref_dim, double alpha, CounterRng& rng,
                SliceMask& mask) {
    const std::size_t n = index.rows();
    const std::size_t d = index.dims();
    if (ref_dim >= d) throw ArgumentError("reference dimension out of range");
    const std::size_t keep = slice_size(n, d, alpha);

    mask.ref_dim = ref_dim;
    mask.member.assign(n, 1);
    for (std::size_t j = 0; j < d; ++j) {
        if (j == ref_dim) continue;
        const auto start = static_cast<std::size_t>(rng.uniform_int(0, n - keep));
        const auto& rows = index.dim(j).row_ids;
        for (std::size_t p = 0; p < start; ++p) mask.member[rows[p]] = 0;
        for (std::size_t p = start + keep; p < n; ++p) mask.member[rows[p]] = 0;
    }
}

SliceMask draw_slice(const RankIndex& index, std::size_t ref_dim, double alpha, CounterRng& rng) {
    SliceMask mask;
    draw_slice(index, ref_dim, alpha, rng, mask);
    return mask;
}

}  // namespace mcde
