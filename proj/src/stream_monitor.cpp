#include "mcde/stream_monitor.hpp"

#include "mcde/error.hpp"
#include "mcde/rng.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_set>

namespace mcde {

std::uint64_t window_seed(std::uint64_t seed, std::size_t row_index) noexcept {
    return derive_seed(seed, row_index);
}

StreamMonitor::StreamMonitor(WindowConfig config, std::optional<DriftRule> drift)
    : config_(std::move(config)), drift_(drift) {
    if (config_.width < 2) throw ArgumentError("window width must be at least 2");
    if (config_.step < 1) throw ArgumentError("window step must be at least 1");
    if (config_.dims.size() < 2) throw ArgumentError("monitor needs at least 2 columns");
    if (config_.m < 1) throw ArgumentError("m must be at least 1");
    std::unordered_set<std::size_t> seen(config_.dims.begin(), config_.dims.end());
    if (seen.size() != config_.dims.size()) throw ArgumentError("monitored columns must be distinct");
    if (drift_ && drift_->consecutive < 1) throw ArgumentError("drift run length must be at least 1");
    ring_.assign(config_.dims.size(), std::vector<double>(config_.width));
}

std::optional<WindowEstimate> StreamMonitor::push(std::span<const double> row) {
    for (std::size_t k = 0; k < config_.dims.size(); ++k) {
        const std::size_t col = config_.dims[k];
        if (col >= row.size()) {
            throw ArgumentError("row has " + std::to_string(row.size()) +
                                " fields, column " + std::to_string(col) + " is monitored");
        }
        if (!std::isfinite(row[col])) throw ArgumentError("non-finite value in monitored column");
    }
    const std::size_t slot = rows_seen_ % config_.width;
    for (std::size_t k = 0; k < config_.dims.size(); ++k) ring_[k][slot] = row[config_.dims[k]];
    const std::size_t row_index = rows_seen_++;

    if (rows_seen_ < config_.width) return std::nullopt;
    if ((row_index - (config_.width - 1)) % config_.step != 0) return std::nullopt;

    ContrastOptions options;
    options.iterations = config_.m;
    options.alpha = config_.alpha;
    options.seed = window_seed(config_.seed, row_index);
    options.threads = config_.threads;

    WindowEstimate out;
    out.row_index = row_index;
    out.estimate = contrast(window(), options);
    if (drift_) {
        below_run_ = out.estimate.score < drift_->threshold ? below_run_ + 1 : 0;
        out.drift = below_run_ >= drift_->consecutive;
    }
    return out;
}

Dataset StreamMonitor::window() const {
    if (rows_seen_ < config_.width) throw ArgumentError("window is not full yet");
    const std::size_t oldest = rows_seen_ % config_.width;
    std::vector<std::vector<double>> columns(ring_.size());
    for (std::size_t k = 0; k < ring_.size(); ++k) {
        columns[k].reserve(config_.width);
        columns[k].insert(columns[k].end(), ring_[k].begin() + oldest, ring_[k].end());
        columns[k].insert(columns[k].end(), ring_[k].begin(), ring_[k].begin() + oldest);
    }
    return Dataset(std::move(columns));
}

MonitorSummary run_monitor(std::istream& in, std::ostream& out, std::ostream& diagnostics,
                           const WindowConfig& config, const MonitorOptions& options) {
    StreamMonitor monitor(config, options.drift);
    MonitorSummary summary;

    out << "row_index,score" << (options.drift ? ",flag" : "") << '\n';

    std::string line;
    std::size_t line_no = 0;
    bool header_pending = options.csv.has_header;
    std::vector<double> row;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }

        row.clear();
        std::string problem;
        std::size_t pos = 0;
        while (problem.empty()) {
            const std::size_t next = line.find(options.csv.delimiter, pos);
            const auto field = std::string_view(line).substr(
                pos, next == std::string::npos ? std::string::npos : next - pos);
            double v = 0.0;
            if (!parse_number(field, v)) {
                problem = "field " + std::to_string(row.size() + 1) + " is not a number";
            } else if (!std::isfinite(v)) {
                problem = "field " + std::to_string(row.size() + 1) + " is not finite";
            }
            row.push_back(v);
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (problem.empty()) {
            const auto widest = *std::max_element(config.dims.begin(), config.dims.end());
            if (widest >= row.size()) {
                problem = "row has " + std::to_string(row.size()) + " fields, column " +
                          std::to_string(widest) + " is monitored";
            }
        }
        if (!problem.empty()) {
            ++summary.malformed;
            const std::string record = "line " + std::to_string(line_no) + ": " + problem;
            if (options.strict) throw StructureError(record);
            diagnostics << record << ", skipped\n";
            continue;
        }

        ++summary.rows;
        if (auto estimate = monitor.push(row)) {
            ++summary.emitted;
            out << estimate->row_index << ','
                << format_number(estimate->estimate.score, options.full_precision);
            if (options.drift) out << ',' << (estimate->drift ? 1 : 0);
            out << '\n';
        }
    }
    if (summary.rows < config.width) {
        diagnostics << "stream ended after " << summary.rows << " rows, before the first window of "
                    << config.width << " rows was complete\n";
    }
    return summary;
}

}  // namespace mcde
