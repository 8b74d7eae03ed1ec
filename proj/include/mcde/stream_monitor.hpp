#pragma once

#include "mcde/contrast.hpp"
#include "mcde/dataset.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace mcde {

struct WindowConfig {
    std::size_t width = 900;
    std::size_t step = 1;
    std::vector<std::size_t> dims = {0, 1};
    std::size_t m = kDefaultIterations;
    double alpha = kDefaultAlpha;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
};

/// Optional alerting on top of the scores: flag once the score has stayed
/// below `threshold` for `consecutive` evaluated windows in a row. These
/// defaults are heuristics, not calibrated values.
struct DriftRule {
    double threshold = 0.55;
    std::size_t consecutive = 3;
};

struct WindowEstimate {
    std::size_t row_index = 0;  ///< 0-based index of the newest row in the window
    ContrastEstimate estimate;
    bool drift = false;
};

/// Seed used for the window ending at `row_index`.
std::uint64_t window_seed(std::uint64_t seed, std::size_t row_index) noexcept;

/// Sliding-window contrast over a row stream. Keeps only the last `width`
/// values of each monitored column and rebuilds the index on every
/// evaluated window.
class StreamMonitor {
public:
    explicit StreamMonitor(WindowConfig config, std::optional<DriftRule> drift = std::nullopt);

    /// Appends one row (full width; only cfg.dims are read). Returns an
    /// estimate when the row completes an evaluated window. Throws
    /// ArgumentError if the row does not cover every monitored column.
    std::optional<WindowEstimate> push(std::span<const double> row);

    std::size_t rows_seen() const noexcept { return rows_seen_; }
    const WindowConfig& config() const noexcept { return config_; }

    /// The current window, oldest row first (projected onto cfg.dims).
    Dataset window() const;

private:
    WindowConfig config_;
    std::optional<DriftRule> drift_;
    std::vector<std::vector<double>> ring_;  // one ring per monitored column
    std::size_t rows_seen_ = 0;
    std::size_t below_run_ = 0;
};

struct MonitorOptions {
    CsvOptions csv;
    bool strict = false;  ///< abort on the first malformed row instead of skipping it
    bool full_precision = false;
    std::optional<DriftRule> drift;
};

struct MonitorSummary {
    std::size_t rows = 0;       ///< rows accepted into the window
    std::size_t emitted = 0;
    std::size_t malformed = 0;
};

/// Reads CSV rows from `in` and writes "row_index,score[,flag]" lines to
/// `out`. Malformed rows produce "line N: ..." records on `diagnostics`;
/// in strict mode the first one is rethrown as a DataError.
MonitorSummary run_monitor(std::istream& in, std::ostream& out, std::ostream& diagnostics,
                           const WindowConfig& config, const MonitorOptions& options = {});

}  // namespace mcde
