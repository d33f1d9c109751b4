#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace polybound {

enum class BoundMethod { hadamard, lemma1, lemma2_search, mignotte, eigenvalue_lemma3 };

std::string_view method_name(BoundMethod m);

/// Optional details recorded by the method that produced a bound.
struct BoundMeta {
  std::optional<std::size_t> argmax_j;   // lemma2: index of the largest F(n, j)
  std::optional<std::size_t> scanned;    // lemma2: indices visited
  std::optional<double> window;          // lemma2: real-valued search limit
  std::optional<std::string> branch;     // lemma3: "d<=beta" or "sqrt(beta*d)^d" / "central-binomial"
  std::optional<double> beta;            // lemma3: spectral radius used (after clamping)
  std::optional<std::size_t> degree;     // minpoly bounds: d
  std::optional<BoundMethod> winner;     // best_minpoly_bound: which bound was smaller
  std::optional<std::size_t> fallback_n; // set when n < 4 forced exhaustive search
};

/// Upper bound 2^bits on the largest absolute coefficient of a polynomial.
struct CoeffBound {
  double bits = 0.0;
  BoundMethod method = BoundMethod::hadamard;
  BoundMeta meta;

  double value() const { return std::exp2(bits); }
};

}  // namespace polybound
