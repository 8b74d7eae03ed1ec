#include "mcde/contrast.hpp"

#include "mcde/error.hpp"
#include "mcde/mwp_test.hpp"
#include "mcde/parallel.hpp"
#include "mcde/slicer.hpp"

#include <cmath>

namespace mcde {

namespace {

void validate(const RankIndex& index, const ContrastOptions& options) {
    if (options.iterations == 0) throw ArgumentError("iteration count must be at least 1");
    if (index.dims() < 2) throw ArgumentError("contrast needs at least 2 dimensions");
    if (index.rows() < 2) throw ArgumentError("contrast needs at least 2 rows");
    if (!(options.alpha > 0.0 && options.alpha <= 1.0)) {
        throw ArgumentError("alpha must lie in (0, 1]");
    }
}

double run_iteration(const RankIndex& index, double alpha, std::uint64_t seed,
                     std::size_t iteration, SliceMask& mask) {
    CounterRng rng(seed, iteration);
    const auto ref = static_cast<std::size_t>(rng.uniform_int(0, index.dims() - 1));
    draw_slice(index, ref, alpha, rng, mask);
    return mwp_test(index, mask, ref, alpha, rng).p_c;
}

}  // namespace

double contrast_iteration(const RankIndex& index, double alpha, std::uint64_t seed,
                          std::size_t iteration) {
    SliceMask mask;
    return run_iteration(index, alpha, seed, iteration, mask);
}

ContrastEstimate contrast(const RankIndex& index, const ContrastOptions& options) {
    validate(index, options);
    const std::size_t m = options.iterations;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(resolve_threads(options.threads), m));

    std::vector<double> values(m);
    std::vector<SliceMask> masks(workers);
    parallel_for(m, workers, [&](std::size_t i, unsigned worker) {
        values[i] = run_iteration(index, options.alpha, options.seed, i, masks[worker]);
    });

    double sum = 0.0;
    for (double v : values) sum += v;

    ContrastEstimate out;
    out.score = sum / static_cast<double>(m);
    out.iterations = m;
    out.alpha = options.alpha;
    out.seed = options.seed;
    if (options.record_iterations) out.per_iteration = std::move(values);
    return out;
}

ContrastEstimate contrast(const Dataset& ds, const ContrastOptions& options) {
    if (options.iterations == 0) throw ArgumentError("iteration count must be at least 1");
    if (ds.cols() < 2) throw ArgumentError("contrast needs at least 2 dimensions");
    return contrast(RankIndex(ds, options.threads), options);
}

double hoeffding_bound(std::size_t m, double epsilon) {
    if (m == 0) throw ArgumentError("iteration count must be at least 1");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ArgumentError("epsilon must lie in (0, 1)");
    return std::min(1.0, 2.0 * std::exp(-2.0 * static_cast<double>(m) * epsilon * epsilon));
}

std::size_t iterations_for(double epsilon, double delta) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ArgumentError("epsilon must lie in (0, 1)");
    if (!(delta > 0.0 && delta < 1.0)) throw ArgumentError("delta must lie in (0, 1)");
    auto m = static_cast<std::size_t>(
        std::max(1.0, std::ceil(std::log(2.0 / delta) / (2.0 * epsilon * epsilon))));
    while (hoeffding_bound(m, epsilon) > delta) ++m;
    while (m > 1 && hoeffding_bound(m - 1, epsilon) <= delta) --m;
    return m;
}

}  // namespace mcde
