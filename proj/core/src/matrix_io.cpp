#include "polybound/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace polybound {
namespace {

bool parse_integer(const std::string& tok, Integer& out) {
  std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (start == tok.size()) return false;
  for (std::size_t k = start; k < tok.size(); ++k) {
    if (tok[k] < '0' || tok[k] > '9') return false;
  }
  // mpz_set_str rejects a leading '+'.
  return out.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) == 0;
}

bool parse_count(const std::string& tok, std::size_t& out) {
  if (tok.empty() || tok.size() > 18) return false;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
  }
  out = std::stoull(tok);
  return true;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(std::move(t));
  return out;
}

// Next non-blank line, tokenized; false at end of stream.
bool next_line(std::istream& in, std::vector<std::string>& toks, std::size_t& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    toks = tokens(line);
    if (!toks.empty()) return true;
  }
  return false;
}

std::string at_line(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

std::size_t check_square(std::size_t rows, std::size_t cols, std::size_t line_no) {
  if (rows != cols) {
    throw NonSquareError(at_line(line_no) + "matrix is " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", only square matrices are supported");
  }
  if (rows == 0) throw DimensionMismatchError(at_line(line_no) + "dimension must be at least 1");
  return rows;
}

IntegerMatrix load_dense(std::istream& in) {
  std::vector<std::string> toks;
  std::size_t line_no = 0;
  if (!next_line(in, toks, line_no)) throw MatrixParseError("empty input");
  std::size_t rows = 0, cols = 0;
  if (toks.size() != 2 || !parse_count(toks[0], rows) || !parse_count(toks[1], cols)) {
    throw MatrixParseError(at_line(line_no) + "expected header \"n n\"");
  }
  const std::size_t n = check_square(rows, cols, line_no);
  std::vector<Integer> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_line(in, toks, line_no)) {
      throw DimensionMismatchError("expected " + std::to_string(n) + " rows, found " +
                                   std::to_string(i));
    }
    if (toks.size() != n) {
      throw DimensionMismatchError(at_line(line_no) + "expected " + std::to_string(n) +
                                   " entries, found " + std::to_string(toks.size()));
    }
    for (const auto& t : toks) {
      Integer v;
      if (!parse_integer(t, v)) throw MatrixParseError(at_line(line_no) + "bad integer '" + t + "'");
      entries.push_back(std::move(v));
    }
  }
  if (next_line(in, toks, line_no)) {
    throw DimensionMismatchError(at_line(line_no) + "trailing data after " + std::to_string(n) +
                                 " rows");
  }
  return IntegerMatrix(n, std::move(entries));
}

IntegerMatrix load_sms(std::istream& in) {
  std::vector<std::string> toks;
  std::size_t line_no = 0;
  if (!next_line(in, toks, line_no)) throw MatrixParseError("empty input");
  std::size_t rows = 0, cols = 0;
  if (toks.size() != 3 || !parse_count(toks[0], rows) || !parse_count(toks[1], cols) ||
      toks[2] != "M") {
    throw MatrixParseError(at_line(line_no) + "expected header \"rows cols M\"");
  }
  const std::size_t n = check_square(rows, cols, line_no);
  std::vector<Integer> entries(n * n);
  bool terminated = false;
  while (next_line(in, toks, line_no)) {
    std::size_t i = 0, j = 0;
    Integer v;
    if (toks.size() != 3 || !parse_count(toks[0], i) || !parse_count(toks[1], j) ||
        !parse_integer(toks[2], v)) {
      throw MatrixParseError(at_line(line_no) + "expected triple \"i j value\"");
    }
    if (i == 0 && j == 0 && sgn(v) == 0) {
      terminated = true;
      break;
    }
    if (i < 1 || i > n || j < 1 || j > n) {
      throw DimensionMismatchError(at_line(line_no) + "index (" + toks[0] + "," + toks[1] +
                                   ") outside " + std::to_string(n) + "x" + std::to_string(n));
    }
    entries[(i - 1) * n + (j - 1)] = std::move(v);
  }
  if (!terminated) throw MatrixParseError("missing \"0 0 0\" terminator");
  if (next_line(in, toks, line_no)) {
    throw MatrixParseError(at_line(line_no) + "trailing data after terminator");
  }
  return IntegerMatrix(n, std::move(entries));
}

}  // namespace

std::optional<MatrixFormat> parse_format_name(std::string_view name) {
  if (name == "dense") return MatrixFormat::dense;
  if (name == "sms") return MatrixFormat::sms;
  return std::nullopt;
}

std::string_view format_name(MatrixFormat f) { return f == MatrixFormat::dense ? "dense" : "sms"; }

IntegerMatrix load_matrix(std::istream& in, MatrixFormat format) {
  return format == MatrixFormat::dense ? load_dense(in) : load_sms(in);
}

MatrixFormat detect_format(std::istream& in) {
  const auto pos = in.tellg();
  std::vector<std::string> toks;
  std::size_t line_no = 0;
  const bool found = next_line(in, toks, line_no);
  in.clear();
  in.seekg(pos);
  return (found && toks.size() == 3 && toks[2] == "M") ? MatrixFormat::sms : MatrixFormat::dense;
}

IntegerMatrix load_matrix_file(const std::string& path, std::optional<MatrixFormat> format) {
  std::ifstream in(path);
  if (!in) throw MatrixParseError("cannot open '" + path + "'");
  return load_matrix(in, format ? *format : detect_format(in));
}

void write_matrix(std::ostream& out, const IntegerMatrix& a, MatrixFormat format) {
  const std::size_t n = a.size();
  if (format == MatrixFormat::dense) {
    out << n << ' ' << n << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << a(i, j);
      out << '\n';
    }
    return;
  }
  out << n << ' ' << n << " M\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(a(i, j)) != 0) out << i + 1 << ' ' << j + 1 << ' ' << a(i, j) << '\n';
    }
  }
  out << "0 0 0\n";
}

}  // namespace polybound
