#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "polybound/matrix.hpp"
#include "polybound/polynomial.hpp"

namespace polybound {

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t x);

/// n x n matrix over Z/pZ, row-major, entries in [0, p).
class ModMatrix {
 public:
  ModMatrix(std::uint64_t p, std::size_t n, std::vector<std::uint64_t> entries);

  std::uint64_t modulus() const noexcept { return p_; }
  std::size_t size() const noexcept { return n_; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::span<const std::uint64_t> entries() const noexcept { return a_; }

 private:
  std::uint64_t p_;
  std::size_t n_;
  std::vector<std::uint64_t> a_;
};

/// Polynomial over Z/pZ; coeffs ascending, reduced, trailing zeros stripped.
struct ModPolynomial {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> coeffs;

  long degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

  friend bool operator==(const ModPolynomial&, const ModPolynomial&) = default;
};

/// Entries a_ij mod p in [0, p). Requires p >= 2.
ModMatrix reduce_mod(const IntegerMatrix& a, std::uint64_t p);
ModPolynomial reduce_mod(const IntPolynomial& f, std::uint64_t p);

/// det(X I - A) over Z/pZ via reduction to upper Hessenberg form. Monic, degree n.
ModPolynomial charpoly_mod(const ModMatrix& a);

/// Minimal polynomial over Z/pZ: least common multiple of the Krylov
/// minimal polynomials of one seeded random vector and of every standard
/// basis vector not already annihilated. The result is certified
/// (m(A) = 0 checked on every basis vector) before it is returned.
ModPolynomial minpoly_mod(const ModMatrix& a, std::uint64_t seed = 0);

/// Minimal polynomial of the Krylov sequence v, Av, A^2 v, ...
ModPolynomial vector_minpoly_mod(const ModMatrix& a, std::span<const std::uint64_t> v);

/// m(A) == 0 over Z/pZ.
bool annihilates_mod(const ModPolynomial& m, const ModMatrix& a);

/// Remainder of f modulo g over Z/pZ (g nonzero).
ModPolynomial rem_mod(const ModPolynomial& f, const ModPolynomial& g);

class PrimeExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Primes below 2^bitsize in descending order, skipping an excluded set.
/// Identical across runs for identical arguments.
class PrimeStream {
 public:
  explicit PrimeStream(int bitsize, std::set<std::uint64_t> excluded = {});

  /// Throws PrimeExhaustedError once every prime below 2^bitsize is used.
  std::uint64_t next();
  int bitsize() const noexcept { return bitsize_; }

 private:
  int bitsize_;
  std::uint64_t cursor_;  // next candidate to test; 0 once exhausted
  std::set<std::uint64_t> excluded_;
};

}  // namespace polybound
