#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcde {

/// Immutable n x d table of finite reals, stored column-major.
class Dataset {
public:
    /// Builds a dataset from columns. Empty `names` yields "col0".."col{d-1}".
    /// Throws StructureError on empty/ragged input, ValidationError on
    /// non-finite values, ArgumentError if names.size() mismatches.
    explicit Dataset(std::vector<std::vector<double>> columns,
                     std::vector<std::string> names = {});

    std::size_t rows() const noexcept { return n_; }
    std::size_t cols() const noexcept { return d_; }

    std::span<const double> column(std::size_t j) const;
    double at(std::size_t row, std::size_t col) const { return column(col)[row]; }

    const std::vector<std::string>& column_names() const noexcept { return names_; }

    /// Rows [first, first + count) of every column.
    Dataset slice_rows(std::size_t first, std::size_t count) const;

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    Dataset() = default;

    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<double> values_;  // column j occupies [j*n, (j+1)*n)
    std::vector<std::string> names_;
};

struct CsvOptions {
    bool has_header = true;
    char delimiter = ',';
};

Dataset parse_csv(std::istream& in, const CsvOptions& options = {});
Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options = {});

/// Writes the dataset using the shortest decimal form that round-trips, so
/// reloading reproduces every value bit-exactly.
void write_csv(std::ostream& out, const Dataset& ds, const CsvOptions& options = {});
void save_csv(const std::filesystem::path& path, const Dataset& ds,
              const CsvOptions& options = {});

/// Projection onto `dims`, in the given order. Indices must be distinct and
/// in range.
Dataset select_subspace(const Dataset& ds, std::span<const std::size_t> dims);

/// Parses one numeric CSV field. Accepts surrounding blanks, a leading '+',
/// and scientific notation. Returns false if the text is not a number.
bool parse_number(std::string_view text, double& value);

/// Shortest round-trip decimal representation of `value`.
std::string format_shortest(double value);

/// 6 significant digits, or the shortest round-trip form when
/// `full_precision`. Integral values keep a trailing ".0".
std::string format_number(double value, bool full_precision = false);

}  // namespace mcde
