#pragma once

// Arithmetic in Z/pZ for p < 2^63 and dense polynomials over it.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polybound::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ZpPoly = std::vector<u64>;  // ascending, trimmed

inline u64 add_mod(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }
inline u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}
inline u64 neg_mod(u64 a, u64 p) { return a == 0 ? 0 : p - a; }

inline u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, b, p);
    b = mul_mod(b, b, p);
    e >>= 1;
  }
  return r;
}

inline u64 inv_mod(u64 a, u64 p) {
  // Extended Euclid on signed 128-bit to avoid overflow for 62-bit moduli.
  __int128 t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("inv_mod: element not invertible");
  if (t < 0) t += p;
  return static_cast<u64>(t);
}

inline void trim(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ZpPoly poly_mul(const ZpPoly& f, const ZpPoly& g, u64 p) {
  if (f.empty() || g.empty()) return {};
  ZpPoly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      out[i + j] = add_mod(out[i + j], mul_mod(f[i], g[j], p), p);
    }
  }
  trim(out);
  return out;
}

// {quotient, remainder}; g must be nonzero.
inline std::pair<ZpPoly, ZpPoly> poly_divrem(ZpPoly f, const ZpPoly& g, u64 p) {
  if (g.empty()) throw std::domain_error("poly_divrem: division by zero polynomial");
  trim(f);
  if (f.size() < g.size()) return {{}, f};
  const u64 lead_inv = inv_mod(g.back(), p);
  ZpPoly q(f.size() - g.size() + 1, 0);
  for (std::size_t k = f.size(); k-- >= g.size();) {
    const u64 c = mul_mod(f[k], lead_inv, p);
    q[k - g.size() + 1] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::size_t idx = k - g.size() + 1 + i;
      f[idx] = sub_mod(f[idx], mul_mod(c, g[i], p), p);
    }
  }
  trim(f);
  trim(q);
  return {q, f};
}

inline ZpPoly make_monic(ZpPoly f, u64 p) {
  trim(f);
  if (f.empty() || f.back() == 1) return f;
  const u64 inv = inv_mod(f.back(), p);
  for (auto& c : f) c = mul_mod(c, inv, p);
  return f;
}

inline ZpPoly poly_gcd(ZpPoly a, ZpPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_divrem(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

// Monic least common multiple of two monic polynomials.
inline ZpPoly poly_lcm(const ZpPoly& a, const ZpPoly& b, u64 p) {
  const ZpPoly g = poly_gcd(a, b, p);
  return make_monic(poly_mul(poly_divrem(a, g, p).first, b, p), p);
}

}  // namespace polybound::detail
