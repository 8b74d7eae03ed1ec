#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcde {

/// Invalid caller-supplied argument (bad index, out-of-range parameter).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base for problems with input data. The CLI maps these to exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A cell that cannot be read as a number. Row and column are 1-based data
/// coordinates (the header line, if any, is not counted as a row).
class ParseError : public DataError {
public:
    ParseError(const std::string& what, std::size_t row, std::size_t column)
        : DataError(what), row_(row), column_(column) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::size_t column_;
};

/// A value that parsed but is not admissible (NaN, infinity).
class ValidationError : public DataError {
public:
    using DataError::DataError;
};

/// Table shape problems: empty input, ragged rows.
class StructureError : public DataError {
public:
    using DataError::DataError;
};

}  // namespace mcde
