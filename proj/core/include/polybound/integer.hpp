#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace polybound {

using Integer = mpz_class;

/// Base-2 logarithm of |x|; -inf for zero. Accurate to a few ulps for any
/// magnitude (no overflow through double conversion).
inline double log2_abs(const Integer& x) {
  if (sgn(x) == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

/// Smallest double >= |x| (mpz_get_d truncates toward zero).
inline double to_double_up(const Integer& x) {
  Integer a = abs(x);
  double d = a.get_d();
  if (std::isfinite(d) && cmp(a, d) > 0) {
    d = std::nextafter(d, std::numeric_limits<double>::infinity());
  }
  return d;
}

inline std::string to_string(const Integer& x) { return x.get_str(10); }

}  // namespace polybound
