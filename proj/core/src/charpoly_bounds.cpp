#include "polybound/charpoly_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace polybound {
namespace {

// log2 B with B < 1 treated as 1.
double clamped_log2(const Integer& b) { return b > 1 ? log2_abs(b) : 0.0; }

// (m/2) log2 m, with the 0 log 0 = 0 convention.
double half_xlog2x(std::size_t m) {
  return m == 0 ? 0.0 : 0.5 * static_cast<double>(m) * std::log2(static_cast<double>(m));
}

double hadamard_term(std::size_t n, double log2b) {
  return 0.5 * static_cast<double>(n) * (std::log2(static_cast<double>(n)) + 2.0 * log2b);
}

// log2 F(n, j+1) - log2 F(n, j).
double step(std::size_t n, double log2b, std::size_t j) {
  return -log2b + std::log2(static_cast<double>(n - j) / static_cast<double>(j + 1)) +
         half_xlog2x(n - j - 1) - half_xlog2x(n - j);
}

// Scans j = 0..last by recursion; fills bits and meta.
CoeffBound scan(std::size_t n, double log2b, std::size_t last, BoundMethod method) {
  CoeffBound out;
  out.method = method;
  double lf = hadamard_term(n, log2b);
  double best = lf;
  std::size_t argmax = 0;
  for (std::size_t j = 0; j < last; ++j) {
    lf += step(n, log2b, j);
    if (lf > best) {
      best = lf;
      argmax = j + 1;
    }
  }
  out.bits = std::max(0.0, best);
  out.meta.argmax_j = argmax;
  out.meta.scanned = last + 1;
  return out;
}

}  // namespace

std::string_view method_name(BoundMethod m) {
  switch (m) {
    case BoundMethod::hadamard: return "hadamard";
    case BoundMethod::lemma1: return "lemma1";
    case BoundMethod::lemma2_search: return "lemma2-search";
    case BoundMethod::mignotte: return "mignotte";
    case BoundMethod::eigenvalue_lemma3: return "eigenvalue-lemma3";
  }
  return "unknown";
}

CoeffBound hadamard_bound(std::size_t n, const Integer& max_abs) {
  CoeffBound out;
  out.method = BoundMethod::hadamard;
  out.bits = sgn(max_abs) == 0 ? 0.0 : std::max(0.0, hadamard_term(n, clamped_log2(max_abs)));
  return out;
}

CoeffBound lemma1_bound(std::size_t n, const Integer& max_abs) {
  if (n < 4) {
    CoeffBound out = sgn(max_abs) == 0 ? CoeffBound{}
                                        : scan(n, clamped_log2(max_abs), n, BoundMethod::lemma1);
    out.method = BoundMethod::lemma1;
    out.meta.fallback_n = n;
    return out;
  }
  CoeffBound out;
  out.method = BoundMethod::lemma1;
  out.bits = 0.5 * static_cast<double>(n) *
             (std::log2(static_cast<double>(n)) + 2.0 * clamped_log2(max_abs) +
              kClosedFormConstant);
  return out;
}

double fnj_log(std::size_t n, const Integer& max_abs, std::size_t j) {
  if (j > n) {
    throw std::domain_error("fnj_log: j = " + std::to_string(j) + " outside [0, " +
                            std::to_string(n) + "]");
  }
  const double log2b = clamped_log2(max_abs);
  double lf = hadamard_term(n, log2b);
  for (std::size_t k = 0; k < j; ++k) lf += step(n, log2b, k);
  return lf;
}

double fnj_log_direct(std::size_t n, const Integer& max_abs, std::size_t j) {
  if (j > n) {
    throw std::domain_error("fnj_log_direct: j = " + std::to_string(j) + " outside [0, " +
                            std::to_string(n) + "]");
  }
  const double log2b = clamped_log2(max_abs);
  const double ln_binom = std::lgamma(static_cast<double>(n) + 1) -
                          std::lgamma(static_cast<double>(j) + 1) -
                          std::lgamma(static_cast<double>(n - j) + 1);
  const std::size_t m = n - j;
  return ln_binom / std::log(2.0) + half_xlog2x(m) + static_cast<double>(m) * log2b;
}

double j_window(std::size_t n, const Integer& max_abs) {
  const double b = max_abs > 1 ? to_double_up(max_abs) : 1.0;
  const double x = 2.0 * kWindowDelta * b * b * static_cast<double>(n);
  if (!std::isfinite(x)) return 0.0;
  return std::max(0.0, 2.0 * static_cast<double>(n) / (1.0 + std::sqrt(1.0 + x)));
}

CoeffBound lemma2_bound(std::size_t n, const Integer& max_abs) {
  const double window = j_window(n, max_abs);
  CoeffBound out;
  if (sgn(max_abs) == 0) {
    out.method = BoundMethod::lemma2_search;
    out.meta.argmax_j = 0;
    out.meta.scanned = 0;
  } else {
    // For n < 4 the window always reaches floor(n/2) (window > 0), so this
    // already is the exhaustive maximum over j = 0..n: F(n, n-j) <= F(n, j)
    // for j <= n/2.
    const auto last = std::min(static_cast<std::size_t>(std::ceil(window)), n / 2);
    out = scan(n, clamped_log2(max_abs), last, BoundMethod::lemma2_search);
    if (n < 4) out.meta.fallback_n = n;
  }
  out.meta.window = window;
  return out;
}

}  // namespace polybound
