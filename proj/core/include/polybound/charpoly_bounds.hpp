#pragma once

#include <cstddef>

#include "polybound/coeff_bound.hpp"
#include "polybound/integer.hpp"

namespace polybound {

/// Additive constant of the closed-form bound: the smallest six-decimal
/// value above (5/6)log2(5) - (2/3)log2(6) = 0.2116317..., the j = 1 term's
/// worst case at n = 6. Every other (n >= 4, j) stays below 0.2052.
inline constexpr double kClosedFormConstant = 0.211632;

/// Constant of the search window for the largest coefficient,
/// 2 exp(1 - 2(7 gamma - 4) / (13 (3 - 2 gamma))).
inline constexpr double kWindowDelta = 5.418236;

/// |det A| <= sqrt(n B^2)^n. Zero bits for B = 0.
CoeffBound hadamard_bound(std::size_t n, const Integer& max_abs);

/// (n/2)(log2 n + max(0, log2 B^2) + kClosedFormConstant) for n >= 4.
/// Smaller n falls back to the exhaustive maximum of fnj_log over j = 0..n.
CoeffBound lemma1_bound(std::size_t n, const Integer& max_abs);

/// log2 F(n, j) with F(n, j) = C(n, j) sqrt((n-j) B^2)^(n-j), obtained by
/// stepping the ratio F(n, k+1) / F(n, k) from k = 0. B < 1 is treated as 1.
/// Throws std::domain_error unless j <= n.
double fnj_log(std::size_t n, const Integer& max_abs, std::size_t j);

/// Same quantity from the closed form (log-gamma binomial); the reference
/// the stepping scheme is checked against.
double fnj_log_direct(std::size_t n, const Integer& max_abs, std::size_t j);

/// max{0, (-1 + sqrt(1 + 2 delta B^2 n)) / (delta B^2)}, B clamped to >= 1.
/// Evaluated as 2n / (1 + sqrt(1 + 2 delta B^2 n)) so huge B cannot overflow.
double j_window(std::size_t n, const Integer& max_abs);

/// Maximum of F(n, j) over j in [0, min(ceil(j_window), floor(n/2))], one
/// recursion step per index. meta carries argmax_j, scanned and window.
/// Zero bits for B = 0. For n < 4 the scanned range covers every index
/// that can hold the maximum, so the result equals the exhaustive search.
CoeffBound lemma2_bound(std::size_t n, const Integer& max_abs);

}  // namespace polybound
