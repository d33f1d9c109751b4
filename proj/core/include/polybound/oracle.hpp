#pragma once

// Brute-force ground truth at desk scale. Nothing here shares an
// elimination path with the modular pipeline: the characteristic polynomial
// comes from Faddeev-LeVerrier over Z, the minimal polynomial from Krylov
// elimination over Q.

#include <cstddef>
#include <stdexcept>

#include "polybound/integer.hpp"
#include "polybound/matrix.hpp"
#include "polybound/polynomial.hpp"

namespace polybound::oracle {

inline constexpr std::size_t kCharpolyMaxN = 64;
inline constexpr std::size_t kMinpolyMaxN = 32;
inline constexpr std::size_t kMinorSumMaxN = 10;

class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// det(X I - A) by Faddeev-LeVerrier with exact integer division.
IntPolynomial charpoly(const IntegerMatrix& a);

/// Minimal polynomial over Q (monic, hence integral), certified m(A) = 0.
IntPolynomial minpoly(const IntegerMatrix& a);

/// Sum of det(A[S, S]) over all (n - j)-subsets S; the empty minor is 1.
/// c_j = (-1)^(n-j) * minor_sum(A, j).
Integer minor_sum(const IntegerMatrix& a, std::size_t j);

/// Exact determinant (fraction-free Bareiss).
Integer determinant(const IntegerMatrix& a);

/// Exact binomial coefficient.
Integer binomial(unsigned long n, unsigned long k);

/// log2 F(n, j) = log2( C(n, j) sqrt((n-j) B^2)^(n-j) ) from the exact
/// binomial; B < 1 treated as 1.
double fnj_log2(std::size_t n, const Integer& max_abs, std::size_t j);

/// max_i C(d, i) beta^(d-i), exactly.
Integer max_binomial_term(unsigned long beta, unsigned long d);

}  // namespace polybound::oracle
