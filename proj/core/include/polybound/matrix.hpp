#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "polybound/integer.hpp"

namespace polybound {

/// Absolute-value statistics consumed by every bound.
struct MagnitudeStats {
  Integer max_abs;                      // B
  std::vector<Integer> abs_diag;        // |a_ii|
  std::vector<Integer> row_abs_sums;    // sum_j |a_ij|
  std::vector<Integer> col_abs_sums;    // sum_i |a_ij|
  std::vector<Integer> off_diag_row_sums;
  std::vector<Integer> off_diag_col_sums;

  friend bool operator==(const MagnitudeStats&, const MagnitudeStats&) = default;
};

/// Computes the statistics from scratch, bypassing any cache.
MagnitudeStats compute_magnitude_stats(std::size_t n, std::span<const Integer> entries);

/// Square matrix of arbitrary-precision integers, immutable after
/// construction. Copies share the lazily filled statistics cache, which is
/// filled at most once even under concurrent readers.
class IntegerMatrix {
 public:
  /// n x n zero matrix.
  explicit IntegerMatrix(std::size_t n);
  /// Row-major entries; throws std::invalid_argument unless entries.size() == n*n and n >= 1.
  IntegerMatrix(std::size_t n, std::vector<Integer> entries);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix diagonal(std::span<const long> diag);
  static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t size() const noexcept { return n_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const Integer> entries() const noexcept { return entries_; }

  const MagnitudeStats& stats() const;
  const Integer& max_abs() const { return stats().max_abs; }

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  struct StatsCache {
    std::once_flag once;
    MagnitudeStats value;
  };

  std::size_t n_;
  std::vector<Integer> entries_;
  std::shared_ptr<StatsCache> cache_;
};

/// Exact product A * v.
std::vector<Integer> multiply(const IntegerMatrix& a, std::span<const Integer> v);

}  // namespace polybound
