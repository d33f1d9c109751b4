#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polybound/integer.hpp"
#include "polybound/matrix.hpp"

namespace polybound {

/// Dense univariate polynomial over Z. coeffs()[k] multiplies X^k; trailing
/// zeros are stripped, so the zero polynomial has no coefficients and
/// degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// Coefficient of X^k; zero beyond the degree.
  Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }

  /// max_k |c_k|; zero for the zero polynomial.
  Integer infinity_norm() const;
  Integer evaluate(const Integer& x) const;

  /// "X^5 - 5*X^4 + 40*X^2 - 80*X + 48"; zero renders as "0".
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
};

class PolynomialParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inverse of IntPolynomial::to_string. Accepts terms "c", "c*X", "c*X^k",
/// "X^k", "-X" joined by '+' / '-', in any order; repeated powers add up.
IntPolynomial parse_polynomial(std::string_view text);

/// Exact polynomial division by a monic divisor; throws std::invalid_argument
/// if the divisor is not monic. Returns {quotient, remainder}.
std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& num,
                                                     const IntPolynomial& den);

/// True iff m(A) = 0, evaluated exactly column by column with Horner's rule.
bool annihilates(const IntPolynomial& m, const IntegerMatrix& a);

}  // namespace polybound
