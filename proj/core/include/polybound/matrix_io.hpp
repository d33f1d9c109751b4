#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "polybound/matrix.hpp"

namespace polybound {

enum class MatrixFormat { dense, sms };

/// Malformed header, row or triple.
class MatrixParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Entry count or index disagrees with the declared dimensions.
class DimensionMismatchError : public MatrixParseError {
 public:
  using MatrixParseError::MatrixParseError;
};

/// Declared dimensions are rectangular.
class NonSquareError : public MatrixParseError {
 public:
  using MatrixParseError::MatrixParseError;
};

std::optional<MatrixFormat> parse_format_name(std::string_view name);
std::string_view format_name(MatrixFormat f);

/// Dense text:  "n n" then n lines of n signed integers.
/// SMS sparse:  "rows cols M", then "i j value" triples (1-based),
///              terminated by "0 0 0". Unlisted entries are zero; for a
///              repeated (i, j) the last triple wins.
IntegerMatrix load_matrix(std::istream& in, MatrixFormat format);

/// Peeks at the header: a third token "M" selects SMS, otherwise dense.
MatrixFormat detect_format(std::istream& in);

IntegerMatrix load_matrix_file(const std::string& path, std::optional<MatrixFormat> format = {});

/// Writes A so that load_matrix(…, format) returns an identical matrix.
void write_matrix(std::ostream& out, const IntegerMatrix& a, MatrixFormat format);

}  // namespace polybound
