#include "polybound/modular.hpp"

#include <random>
#include <string>

#include "zp.hpp"

namespace polybound {

using detail::add_mod;
using detail::inv_mod;
using detail::mul_mod;
using detail::sub_mod;
using detail::u64;
using detail::ZpPoly;

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (x % q == 0) return x == q;
  }
  u64 d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set below 3.3e24.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 y = detail::pow_mod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      y = mul_mod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ModMatrix::ModMatrix(std::uint64_t p, std::size_t n, std::vector<std::uint64_t> entries)
    : p_(p), n_(n), a_(std::move(entries)) {
  if (p_ < 2) throw std::invalid_argument("modulus must be at least 2");
  if (a_.size() != n_ * n_) throw std::invalid_argument("ModMatrix: wrong entry count");
}

ModMatrix reduce_mod(const IntegerMatrix& a, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("reduce_mod: modulus must be at least 2");
  std::vector<u64> out;
  out.reserve(a.entries().size());
  for (const auto& x : a.entries()) out.push_back(mpz_fdiv_ui(x.get_mpz_t(), p));
  return ModMatrix(p, a.size(), std::move(out));
}

ModPolynomial reduce_mod(const IntPolynomial& f, std::uint64_t p) {
  ModPolynomial out{p, {}};
  for (const auto& c : f.coeffs()) out.coeffs.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  detail::trim(out.coeffs);
  return out;
}

ModPolynomial charpoly_mod(const ModMatrix& a) {
  const u64 p = a.modulus();
  const std::size_t n = a.size();
  std::vector<u64> h(a.entries().begin(), a.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };

  // Similarity transforms to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && at(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, piv), at(i, m));
    }
    const u64 inv = inv_mod(at(m, m - 1), p);
    for (std::size_t i = m + 1; i < n; ++i) {
      const u64 u = mul_mod(at(i, m - 1), inv, p);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) at(i, j) = sub_mod(at(i, j), mul_mod(u, at(m, j), p), p);
      for (std::size_t r = 0; r < n; ++r) at(r, m) = add_mod(at(r, m), mul_mod(u, at(r, i), p), p);
    }
  }

  // Charpolys of leading principal submatrices:
  //   P_m = (X - h_mm) P_{m-1} - sum_i h_{m-i,m} (prod of i subdiagonal entries) P_{m-i-1}.
  std::vector<ZpPoly> polys(n + 1);
  polys[0] = {1 % p};
  for (std::size_t m = 1; m <= n; ++m) {
    const ZpPoly& prev = polys[m - 1];
    ZpPoly cur(m + 1, 0);
    const u64 diag = at(m - 1, m - 1);
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = add_mod(cur[k + 1], prev[k], p);
      cur[k] = sub_mod(cur[k], mul_mod(diag, prev[k], p), p);
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mul_mod(t, at(m - i, m - i - 1), p);
      if (t == 0) break;
      const u64 c = mul_mod(t, at(m - i - 1, m - 1), p);
      if (c == 0) continue;
      const ZpPoly& lower = polys[m - i - 1];
      for (std::size_t k = 0; k < lower.size(); ++k) {
        cur[k] = sub_mod(cur[k], mul_mod(c, lower[k], p), p);
      }
    }
    polys[m] = std::move(cur);
  }
  return ModPolynomial{p, std::move(polys[n])};
}

namespace {

std::vector<u64> matvec(const ModMatrix& a, std::span<const u64> v) {
  const std::size_t n = a.size();
  const u64 p = a.modulus();
  std::vector<u64> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    u64 acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] != 0) acc = add_mod(acc, mul_mod(a(i, j), v[j], p), p);
    }
    out[i] = acc;
  }
  return out;
}

// m(A) v by Horner's rule.
std::vector<u64> apply_poly(const ZpPoly& m, const ModMatrix& a, std::span<const u64> v) {
  const std::size_t n = a.size();
  const u64 p = a.modulus();
  std::vector<u64> w(n, 0);
  for (std::size_t k = m.size(); k-- > 0;) {
    w = matvec(a, w);
    if (m[k] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) w[i] = add_mod(w[i], mul_mod(m[k], v[i], p), p);
  }
  return w;
}

bool is_zero(std::span<const u64> v) {
  for (u64 x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

ModPolynomial vector_minpoly_mod(const ModMatrix& a, std::span<const std::uint64_t> v) {
  const std::size_t n = a.size();
  const u64 p = a.modulus();

  // Echelon basis of the Krylov space seen so far. Each reduced vector r
  // satisfies r = q(A) v and r[pivot] = 1.
  struct Row {
    std::vector<u64> r;
    ZpPoly q;
    std::size_t pivot;
  };
  std::vector<Row> basis;
  std::vector<u64> raw(v.begin(), v.end());

  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<u64> w = raw;
    ZpPoly q(k + 1, 0);
    q[k] = 1;
    for (const auto& b : basis) {
      const u64 c = w[b.pivot];
      if (c == 0) continue;
      for (std::size_t i = 0; i < n; ++i) w[i] = sub_mod(w[i], mul_mod(c, b.r[i], p), p);
      for (std::size_t i = 0; i < b.q.size(); ++i) q[i] = sub_mod(q[i], mul_mod(c, b.q[i], p), p);
    }
    if (is_zero(w)) {
      detail::trim(q);
      return ModPolynomial{p, std::move(q)};
    }
    std::size_t pivot = 0;
    while (w[pivot] == 0) ++pivot;
    const u64 inv = inv_mod(w[pivot], p);
    for (auto& x : w) x = mul_mod(x, inv, p);
    for (auto& x : q) x = mul_mod(x, inv, p);
    basis.push_back({std::move(w), std::move(q), pivot});
    raw = matvec(a, raw);
  }
  throw std::logic_error("vector_minpoly_mod: Krylov sequence did not become dependent");
}

bool annihilates_mod(const ModPolynomial& m, const ModMatrix& a) {
  const std::size_t n = a.size();
  std::vector<u64> e(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    e[k] = 1;
    const bool ok = is_zero(apply_poly(m.coeffs, a, e));
    e[k] = 0;
    if (!ok) return false;
  }
  return true;
}

ModPolynomial minpoly_mod(const ModMatrix& a, std::uint64_t seed) {
  const std::size_t n = a.size();
  const u64 p = a.modulus();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> dist(0, p - 1);
  std::vector<u64> v(n);
  for (auto& x : v) x = dist(rng);

  ZpPoly m = vector_minpoly_mod(a, v).coeffs;
  std::vector<u64> e(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    e[k] = 1;
    if (!is_zero(apply_poly(m, a, e))) m = detail::poly_lcm(m, vector_minpoly_mod(a, e).coeffs, p);
    e[k] = 0;
  }
  ModPolynomial out{p, std::move(m)};
  if (!annihilates_mod(out, a)) {
    throw std::logic_error("minpoly_mod: certification failed modulo " + std::to_string(p));
  }
  return out;
}

ModPolynomial rem_mod(const ModPolynomial& f, const ModPolynomial& g) {
  return ModPolynomial{f.p, detail::poly_divrem(f.coeffs, g.coeffs, f.p).second};
}

PrimeStream::PrimeStream(int bitsize, std::set<std::uint64_t> excluded)
    : bitsize_(bitsize), excluded_(std::move(excluded)) {
  if (bitsize < 2 || bitsize > 62) {
    throw std::invalid_argument("prime bitsize must lie in [2, 62], got " + std::to_string(bitsize));
  }
  cursor_ = (std::uint64_t{1} << bitsize) - 1;
}

std::uint64_t PrimeStream::next() {
  while (cursor_ >= 2) {
    const u64 c = cursor_--;
    if (is_prime(c) && !excluded_.contains(c)) return c;
  }
  throw PrimeExhaustedError("no primes left below 2^" + std::to_string(bitsize_));
}

}  // namespace polybound
