#include "mcde/dataset.hpp"

#include "mcde/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace mcde {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = line.find(delimiter, pos);
        if (next == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
}

}  // namespace

Dataset::Dataset(std::vector<std::vector<double>> columns, std::vector<std::string> names) {
    if (columns.empty()) throw StructureError("dataset has no columns");
    d_ = columns.size();
    n_ = columns.front().size();
    if (n_ == 0) throw StructureError("dataset has no rows");
    if (!names.empty() && names.size() != d_) {
        throw ArgumentError("expected " + std::to_string(d_) + " column names, got " +
                            std::to_string(names.size()));
    }
    values_.reserve(n_ * d_);
    for (std::size_t j = 0; j < d_; ++j) {
        if (columns[j].size() != n_) {
            throw StructureError("column " + std::to_string(j) + " has " +
                                 std::to_string(columns[j].size()) + " rows, expected " +
                                 std::to_string(n_));
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (!std::isfinite(columns[j][i])) {
                throw ValidationError("non-finite value at row " + std::to_string(i + 1) +
                                      ", column " + std::to_string(j + 1));
            }
        }
        values_.insert(values_.end(), columns[j].begin(), columns[j].end());
    }
    if (names.empty()) {
        names.reserve(d_);
        for (std::size_t j = 0; j < d_; ++j) names.push_back("col" + std::to_string(j));
    }
    names_ = std::move(names);
}

std::span<const double> Dataset::column(std::size_t j) const {
    if (j >= d_) throw ArgumentError("column index " + std::to_string(j) + " out of range");
    return {values_.data() + j * n_, n_};
}

Dataset Dataset::slice_rows(std::size_t first, std::size_t count) const {
    if (count == 0 || first + count > n_) throw ArgumentError("row range out of bounds");
    Dataset out;
    out.n_ = count;
    out.d_ = d_;
    out.names_ = names_;
    out.values_.reserve(count * d_);
    for (std::size_t j = 0; j < d_; ++j) {
        const auto col = column(j).subspan(first, count);
        out.values_.insert(out.values_.end(), col.begin(), col.end());
    }
    return out;
}

bool parse_number(std::string_view text, double& value) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return false;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    // Out-of-range magnitudes parse as errors; report them as non-numeric
    // rather than silently saturating.
    return ec == std::errc{} && ptr == text.data() + text.size();
}

std::string format_shortest(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string format_number(double value, bool full_precision) {
    std::string s;
    if (full_precision) {
        s = format_shortest(value);
    } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6g", value);
        s = buf;
    }
    if (std::isfinite(value) && s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

Dataset parse_csv(std::istream& in, const CsvOptions& options) {
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;
    std::string line;
    std::size_t row = 0;
    bool header_pending = options.has_header;

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const auto fields = split(line, options.delimiter);

        if (header_pending) {
            header_pending = false;
            for (auto f : fields) names.emplace_back(trim(f));
            continue;
        }

        ++row;
        if (columns.empty()) {
            if (!names.empty() && names.size() != fields.size()) {
                throw StructureError("row 1 has " + std::to_string(fields.size()) +
                                     " fields but the header has " +
                                     std::to_string(names.size()));
            }
            columns.resize(fields.size());
        } else if (fields.size() != columns.size()) {
            throw StructureError("row " + std::to_string(row) + " has " +
                                 std::to_string(fields.size()) + " fields, expected " +
                                 std::to_string(columns.size()));
        }
        for (std::size_t j = 0; j < fields.size(); ++j) {
            double v = 0.0;
            if (!parse_number(fields[j], v)) {
                throw ParseError("row " + std::to_string(row) + ", column " +
                                     std::to_string(j + 1) + ": cannot parse '" +
                                     std::string(trim(fields[j])) + "' as a number",
                                 row, j + 1);
            }
            if (!std::isfinite(v)) {
                throw ValidationError("row " + std::to_string(row) + ", column " +
                                      std::to_string(j + 1) + ": non-finite value");
            }
            columns[j].push_back(v);
        }
    }
    if (columns.empty()) throw StructureError("input contains no data rows");
    return Dataset(std::move(columns), std::move(names));
}

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    return parse_csv(in, options);
}

void write_csv(std::ostream& out, const Dataset& ds, const CsvOptions& options) {
    if (options.has_header) {
        for (std::size_t j = 0; j < ds.cols(); ++j) {
            if (j) out << options.delimiter;
            out << ds.column_names()[j];
        }
        out << '\n';
    }
    std::string line;
    for (std::size_t i = 0; i < ds.rows(); ++i) {
        line.clear();
        for (std::size_t j = 0; j < ds.cols(); ++j) {
            if (j) line += options.delimiter;
            line += format_shortest(ds.at(i, j));
        }
        line += '\n';
        out << line;
    }
}

void save_csv(const std::filesystem::path& path, const Dataset& ds, const CsvOptions& options) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    write_csv(out, ds, options);
}

Dataset select_subspace(const Dataset& ds, std::span<const std::size_t> dims) {
    if (dims.empty()) throw ArgumentError("subspace must contain at least one dimension");
    std::unordered_set<std::size_t> seen;
    std::vector<std::vector<double>> columns;
    std::vector<std::string> names;
    for (auto j : dims) {
        if (j >= ds.cols()) {
            throw ArgumentError("dimension " + std::to_string(j) + " out of range [0, " +
                                std::to_string(ds.cols()) + ")");
        }
        if (!seen.insert(j).second) {
            throw ArgumentError("dimension " + std::to_string(j) + " listed twice");
        }
        const auto col = ds.column(j);
        columns.emplace_back(col.begin(), col.end());
        names.push_back(ds.column_names()[j]);
    }
    return Dataset(std::move(columns), std::move(names));
}

}  // namespace mcde
