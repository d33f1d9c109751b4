#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "polybound/coeff_bound.hpp"
#include "polybound/integer.hpp"
#include "polybound/matrix.hpp"
#include "polybound/modular.hpp"
#include "polybound/polynomial.hpp"

namespace polybound {

/// Primes whose product strictly exceeds 2 * 2^bound.bits, so that every
/// integer of absolute value at most 2^bits has a unique symmetric residue.
struct CrtPlan {
  CoeffBound bound;
  std::vector<std::uint64_t> primes;
  Integer product = 1;
};

/// Draws primes from the stream until product > 2^(bits + 1). Minimal for
/// the stream's order: dropping the last prime breaks the inequality.
CrtPlan plan_primes(const CoeffBound& bound, PrimeStream& stream);
CrtPlan plan_primes(const CoeffBound& bound, int bitsize);

/// product > 2^(bits + 1), evaluated without overflow.
bool covers(const Integer& product, double bits);

struct ResidueOf {
  std::uint64_t value;
  std::uint64_t modulus;
};

class NonCoprimeModuliError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unique x with x = value (mod p) for every pair and -M/2 < x <= M/2,
/// M the product of the moduli. An empty list yields 0.
Integer crt_combine(std::span<const ResidueOf> residues);

/// Coefficientwise crt_combine of equal-degree images.
IntPolynomial crt_combine(std::span<const ModPolynomial> images);

/// Safety margin added to bound bits before planning, absorbing
/// floating-point rounding in the bound arithmetic.
double planning_margin(std::size_t n);

struct ReconstructOptions {
  int prime_bits = 31;
  /// Worker threads for per-prime jobs; 0 picks hardware concurrency.
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

/// Reads POLYBOUND_THREADS (0 or unset means automatic).
unsigned threads_from_environment();

struct Reconstruction {
  IntPolynomial polynomial;
  CrtPlan plan;                              // primes actually combined
  std::vector<std::uint64_t> discarded;      // minpoly images of too-low degree
  std::size_t attempts = 1;                  // minpoly: 1 + restarts after failed verification
};

class ReconstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// det(X I - A) from modular images, with the prime count taken from
/// lemma2_bound. No verification step: the bound is proven.
Reconstruction reconstruct_charpoly(const IntegerMatrix& a, const ReconstructOptions& opts = {});

/// Minimal polynomial from modular images. The degree d of the first image
/// sizes the prime budget through best_minpoly_bound; images of lower
/// degree than the largest seen are discarded and replaced, and the result
/// is checked exactly (m(A) = 0 over Z). A failed check means every image so
/// far came from a bad prime; more primes are drawn until a larger degree
/// shows up and the budget is recomputed.
Reconstruction reconstruct_minpoly(const IntegerMatrix& a, const ReconstructOptions& opts = {});

}  // namespace polybound
