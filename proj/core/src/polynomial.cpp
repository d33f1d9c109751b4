#include "polybound/polynomial.hpp"

#include <cctype>

namespace polybound {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
    : IntPolynomial(std::vector<Integer>(coeffs.begin(), coeffs.end())) {}

Integer IntPolynomial::infinity_norm() const {
  Integer best = 0;
  for (const auto& c : coeffs_) {
    if (mpz_cmpabs(c.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(c);
  }
  return best;
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Integer mag = abs(c);
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "X";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

IntPolynomial parse_polynomial(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw PolynomialParseError("empty polynomial");
  std::vector<Integer> coeffs;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw PolynomialParseError(why + " at offset " + std::to_string(pos) + " in '" + s + "'");
  };
  auto digits = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Integer c = 1;
    std::size_t power = 0;
    const std::string num = digits();
    if (!num.empty()) c = Integer(num, 10);
    if (!num.empty() && pos < s.size() && s[pos] == 'X') fail("expected '*'");
    if (pos < s.size() && s[pos] == '*') {
      if (num.empty()) fail("'*' without coefficient");
      ++pos;
      if (pos >= s.size() || s[pos] != 'X') fail("expected 'X'");
    }
    if (pos < s.size() && s[pos] == 'X') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::string e = digits();
        if (e.empty()) fail("expected exponent");
        power = std::stoul(e);
      }
    } else if (num.empty()) {
      fail("expected term");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += sign * c;
  }
  return IntPolynomial(std::move(coeffs));
}

std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& num,
                                                     const IntPolynomial& den) {
  if (!den.is_monic()) throw std::invalid_argument("divisor must be monic");
  std::vector<Integer> rem = num.coeffs();
  const long dd = den.degree();
  if (num.degree() < dd) return {IntPolynomial(), num};
  std::vector<Integer> quot(static_cast<std::size_t>(num.degree() - dd + 1));
  for (long k = num.degree(); k >= dd; --k) {
    const Integer q = rem[static_cast<std::size_t>(k)];
    quot[static_cast<std::size_t>(k - dd)] = q;
    if (sgn(q) == 0) continue;
    for (long i = 0; i <= dd; ++i) {
      rem[static_cast<std::size_t>(k - dd + i)] -= q * den.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool annihilates(const IntPolynomial& m, const IntegerMatrix& a) {
  if (m.is_zero()) return true;
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    // w = m(A) e_col by Horner: w <- A w + m_k e_col.
    std::vector<Integer> w(n);
    w[col] = m.leading();
    for (long k = m.degree() - 1; k >= 0; --k) {
      w = multiply(a, w);
      w[col] += m.coeffs()[static_cast<std::size_t>(k)];
    }
    for (const auto& x : w) {
      if (sgn(x) != 0) return false;
    }
  }
  return true;
}

}  // namespace polybound
