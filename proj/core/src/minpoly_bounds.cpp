#include "polybound/minpoly_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "polybound/charpoly_bounds.hpp"

namespace polybound {
namespace {

double max_up(const std::vector<Integer>& v) {
  double best = 0.0;
  for (const auto& x : v) best = std::max(best, to_double_up(x));
  return best;
}

std::vector<double> up(const std::vector<Integer>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_double_up(x));
  return out;
}

// Largest root of (x - a)(x - b) = r.
double oval_radius(double a, double b, double r) {
  const double h = 0.5 * (a - b);
  return 0.5 * (a + b) + std::sqrt(h * h + r);
}

// Two largest values, first >= second.
std::pair<double, double> top_two(const std::vector<double>& v) {
  double first = 0.0, second = 0.0;
  for (double x : v) {
    if (x > first) {
      second = first;
      first = x;
    } else if (x > second) {
      second = x;
    }
  }
  return {first, second};
}

double cassini_side(const std::vector<double>& diag, const std::vector<double>& radii,
                    std::size_t pair_threshold) {
  const std::size_t n = diag.size();
  if (n > pair_threshold) {
    // oval_radius is nondecreasing in each argument; any pair i != j is
    // dominated by (largest |a|, second |a|, largest R * second R).
    const auto [a1, a2] = top_two(diag);
    const auto [r1, r2] = top_two(radii);
    return oval_radius(a1, a2, r1 * r2);
  }
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      best = std::max(best, oval_radius(diag[i], diag[j], radii[i] * radii[j]));
    }
  }
  return best;
}

}  // namespace

std::string_view method_name(SpectralMethod m) {
  switch (m) {
    case SpectralMethod::gershgorin_row: return "gershgorin-row";
    case SpectralMethod::gershgorin_col: return "gershgorin-col";
    case SpectralMethod::cassini_row: return "cassini-row";
    case SpectralMethod::cassini_col: return "cassini-col";
    case SpectralMethod::combined: return "combined";
  }
  return "unknown";
}

SpectralBound gershgorin_bound(const IntegerMatrix& a) {
  const auto& s = a.stats();
  const double row = max_up(s.row_abs_sums);
  const double col = max_up(s.col_abs_sums);
  return row <= col ? SpectralBound{row, SpectralMethod::gershgorin_row}
                    : SpectralBound{col, SpectralMethod::gershgorin_col};
}

SpectralBound cassini_bound(const IntegerMatrix& a, std::size_t pair_threshold) {
  const auto& s = a.stats();
  const auto diag = up(s.abs_diag);
  if (a.size() == 1) return {diag[0], SpectralMethod::cassini_row};
  const double row = cassini_side(diag, up(s.off_diag_row_sums), pair_threshold);
  const double col = cassini_side(diag, up(s.off_diag_col_sums), pair_threshold);
  return row <= col ? SpectralBound{row, SpectralMethod::cassini_row}
                    : SpectralBound{col, SpectralMethod::cassini_col};
}

SpectralBound spectral_radius_bound(const IntegerMatrix& a) {
  const auto g = gershgorin_bound(a);
  const auto c = cassini_bound(a);
  return c.beta < g.beta ? c : g;
}

CoeffBound lemma3_bound(double beta, std::size_t d) {
  if (d == 0) throw std::domain_error("lemma3_bound: degree must be at least 1");
  const double b = std::max(beta, 1.0);
  const double dd = static_cast<double>(d);
  CoeffBound out;
  out.method = BoundMethod::eigenvalue_lemma3;
  out.meta.beta = b;
  out.meta.degree = d;
  if (dd <= b) {
    out.bits = dd * std::log2(b);
    out.meta.branch = "d<=beta";
    return out;
  }
  const double geometric = 0.5 * dd * std::log2(b * dd);
  const double central = 0.5 * std::log2(2.0 / (dd * std::numbers::pi)) + dd + dd * std::log2(b);
  if (geometric <= central) {
    out.bits = geometric;
    out.meta.branch = "sqrt(beta*d)^d";
  } else {
    out.bits = central;
    out.meta.branch = "central-binomial";
  }
  out.bits = std::max(0.0, out.bits);
  return out;
}

CoeffBound mignotte_bound(const CoeffBound& charpoly, std::size_t d, std::size_t n) {
  if (d < 1 || d > n) {
    throw std::domain_error("mignotte_bound: degree " + std::to_string(d) + " outside [1, " +
                            std::to_string(n) + "]");
  }
  CoeffBound out;
  out.method = BoundMethod::mignotte;
  out.bits = static_cast<double>(d) + charpoly.bits;
  out.meta.degree = d;
  return out;
}

CoeffBound best_minpoly_bound(const IntegerMatrix& a, std::size_t d) {
  const auto spectral = lemma3_bound(spectral_radius_bound(a).beta, d);
  const auto factor = mignotte_bound(lemma2_bound(a.size(), a.max_abs()), d, a.size());
  CoeffBound out = spectral.bits <= factor.bits ? spectral : factor;
  out.meta.winner = out.method;
  return out;
}

}  // namespace polybound
