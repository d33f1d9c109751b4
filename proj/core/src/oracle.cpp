#include "polybound/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace polybound::oracle {
namespace {

void guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw SizeGuardError(std::string(what) + ": n = " + std::to_string(n) + " exceeds " +
                         std::to_string(limit));
  }
}

using Rational = mpq_class;
using QPoly = std::vector<Rational>;  // ascending, trimmed

void trim(QPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

QPoly monic(QPoly f) {
  trim(f);
  if (f.empty()) return f;
  const Rational lead = f.back();
  for (auto& c : f) c /= lead;
  return f;
}

QPoly rem(QPoly f, const QPoly& g) {
  trim(f);
  while (f.size() >= g.size()) {
    const Rational c = f.back() / g.back();
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
    f.pop_back();
    trim(f);
  }
  return f;
}

QPoly quotient(QPoly f, const QPoly& g) {
  trim(f);
  if (f.size() < g.size()) return {};
  QPoly q(f.size() - g.size() + 1);
  while (f.size() >= g.size()) {
    const Rational c = f.back() / g.back();
    const std::size_t shift = f.size() - g.size();
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
    f.pop_back();
    trim(f);
  }
  return q;
}

QPoly mul(const QPoly& f, const QPoly& g) {
  if (f.empty() || g.empty()) return {};
  QPoly out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  trim(out);
  return out;
}

QPoly lcm(const QPoly& f, const QPoly& g) {
  QPoly a = f, b = g;
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(mul(quotient(f, monic(a)), g));
}

// Minimal polynomial of e_col under A over Q, by elimination on the Krylov
// vectors e_col, A e_col, ... until the first linear dependency.
QPoly krylov_minpoly(const IntegerMatrix& a, std::size_t col) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> basis;   // reduced vectors, basis[k][pivot[k]] = 1
  std::vector<QPoly> combos;                  // basis[k] = combos[k](A) e_col
  std::vector<std::size_t> pivots;
  std::vector<Integer> power(n);
  power[col] = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Rational> w(power.begin(), power.end());
    QPoly q(k + 1);
    q[k] = 1;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational c = w[pivots[b]];
      if (sgn(c) == 0) continue;
      for (std::size_t i = 0; i < n; ++i) w[i] -= c * basis[b][i];
      for (std::size_t i = 0; i < combos[b].size(); ++i) q[i] -= c * combos[b][i];
    }
    std::size_t piv = 0;
    while (piv < n && sgn(w[piv]) == 0) ++piv;
    if (piv == n) return monic(std::move(q));
    const Rational inv = 1 / w[piv];
    for (auto& x : w) x *= inv;
    for (auto& x : q) x *= inv;
    basis.push_back(std::move(w));
    combos.push_back(std::move(q));
    pivots.push_back(piv);
    power = multiply(a, power);
  }
  throw std::logic_error("oracle::minpoly: no Krylov dependency within n + 1 vectors");
}

}  // namespace

IntPolynomial charpoly(const IntegerMatrix& a) {
  const std::size_t n = a.size();
  guard(n, kCharpolyMaxN, "oracle::charpoly");
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  // M_1 = I;  c_{n-k} = -tr(A M_k) / k;  M_{k+1} = A M_k + c_{n-k} I.
  std::vector<Integer> m(n * n), am(n * n);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Integer acc = 0;
        for (std::size_t l = 0; l < n; ++l) acc += a(i, l) * m[l * n + j];
        am[i * n + j] = std::move(acc);
      }
    }
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i * n + i];
    Integer ck;
    mpz_divexact_ui(ck.get_mpz_t(), trace.get_mpz_t(), k);
    ck = -ck;
    for (std::size_t i = 0; i < n; ++i) am[i * n + i] += ck;
    c[n - k] = std::move(ck);
    std::swap(m, am);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial minpoly(const IntegerMatrix& a) {
  const std::size_t n = a.size();
  guard(n, kMinpolyMaxN, "oracle::minpoly");
  QPoly m{Rational(1)};
  for (std::size_t col = 0; col < n; ++col) m = lcm(m, krylov_minpoly(a, col));
  std::vector<Integer> coeffs;
  for (auto& c : m) {
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("oracle::minpoly: non-integral coefficient");
    coeffs.push_back(c.get_num());
  }
  IntPolynomial out(std::move(coeffs));
  if (!annihilates(out, a)) throw std::logic_error("oracle::minpoly: m(A) != 0");
  return out;
}

Integer determinant(const IntegerMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Integer> m(a.entries().begin(), a.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return m[i * n + j]; };
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(at(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(at(r, k)) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

Integer minor_sum(const IntegerMatrix& a, std::size_t j) {
  const std::size_t n = a.size();
  guard(n, kMinorSumMaxN, "oracle::minor_sum");
  if (j > n) throw std::domain_error("oracle::minor_sum: j > n");
  const std::size_t k = n - j;
  if (k == 0) return 1;
  Integer total = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    std::vector<Integer> sub;
    sub.reserve(k * k);
    for (auto r : idx) {
      for (auto c : idx) sub.push_back(a(r, c));
    }
    total += determinant(IntegerMatrix(k, std::move(sub)));
  }
  return total;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

double fnj_log2(std::size_t n, const Integer& max_abs, std::size_t j) {
  if (j > n) throw std::domain_error("oracle::fnj_log2: j > n");
  const double log2b = max_abs > 1 ? log2_abs(max_abs) : 0.0;
  const double m = static_cast<double>(n - j);
  const double root = n == j ? 0.0 : 0.5 * m * std::log2(m);
  return log2_abs(binomial(n, j)) + root + m * log2b;
}

Integer max_binomial_term(unsigned long beta, unsigned long d) {
  Integer best = 0, pw;
  for (unsigned long i = 0; i <= d; ++i) {
    mpz_ui_pow_ui(pw.get_mpz_t(), beta, d - i);
    Integer term = binomial(d, i) * pw;
    if (term > best) best = term;
  }
  return best;
}

}  // namespace polybound::oracle
