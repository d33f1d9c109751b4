#include "polybound/matrix.hpp"

#include <stdexcept>
#include <string>

namespace polybound {

MagnitudeStats compute_magnitude_stats(std::size_t n, std::span<const Integer> entries) {
  MagnitudeStats s;
  s.max_abs = 0;
  s.abs_diag.assign(n, 0);
  s.row_abs_sums.assign(n, 0);
  s.col_abs_sums.assign(n, 0);
  Integer a;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a = abs(entries[i * n + j]);
      if (a > s.max_abs) s.max_abs = a;
      s.row_abs_sums[i] += a;
      s.col_abs_sums[j] += a;
      if (i == j) s.abs_diag[i] = a;
    }
  }
  s.off_diag_row_sums.resize(n);
  s.off_diag_col_sums.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.off_diag_row_sums[i] = s.row_abs_sums[i] - s.abs_diag[i];
    s.off_diag_col_sums[i] = s.col_abs_sums[i] - s.abs_diag[i];
  }
  return s;
}

IntegerMatrix::IntegerMatrix(std::size_t n) : IntegerMatrix(n, std::vector<Integer>(n * n)) {}

IntegerMatrix::IntegerMatrix(std::size_t n, std::vector<Integer> entries)
    : n_(n), entries_(std::move(entries)), cache_(std::make_shared<StatsCache>()) {
  if (n_ == 0) throw std::invalid_argument("matrix dimension must be at least 1");
  if (entries_.size() != n_ * n_) {
    throw std::invalid_argument("expected " + std::to_string(n_ * n_) + " entries, got " +
                                std::to_string(entries_.size()));
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  std::vector<Integer> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return IntegerMatrix(n, std::move(e));
}

IntegerMatrix IntegerMatrix::diagonal(std::span<const long> diag) {
  const std::size_t n = diag.size();
  std::vector<Integer> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return IntegerMatrix(n, std::move(e));
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Integer> e;
  e.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("rows must form a square matrix");
    for (long x : r) e.emplace_back(x);
  }
  return IntegerMatrix(n, std::move(e));
}

const MagnitudeStats& IntegerMatrix::stats() const {
  std::call_once(cache_->once, [this] { cache_->value = compute_magnitude_stats(n_, entries_); });
  return cache_->value;
}

std::vector<Integer> multiply(const IntegerMatrix& a, std::span<const Integer> v) {
  const std::size_t n = a.size();
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(v[j]) != 0) acc += a(i, j) * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

}  // namespace polybound
