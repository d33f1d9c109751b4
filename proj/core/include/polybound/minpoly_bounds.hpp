#pragma once

#include <cstddef>
#include <string_view>

#include "polybound/coeff_bound.hpp"
#include "polybound/matrix.hpp"

namespace polybound {

enum class SpectralMethod { gershgorin_row, gershgorin_col, cassini_row, cassini_col, combined };

std::string_view method_name(SpectralMethod m);

/// Upper bound beta on the spectral radius.
struct SpectralBound {
  double beta = 0.0;
  SpectralMethod method = SpectralMethod::combined;
};

/// Above this dimension cassini_bound combines only the two largest |a_ii|
/// with the two largest off-diagonal sums instead of enumerating all pairs.
inline constexpr std::size_t kCassiniPairThreshold = 4096;

/// Smaller of max row absolute sum and max column absolute sum.
SpectralBound gershgorin_bound(const IntegerMatrix& a);

/// Outer radius of the union of Cassini ovals |z - a_ii||z - a_jj| <= R_i R_j,
/// i != j: the largest root of (x - |a_ii|)(x - |a_jj|) = R_i R_j maximized
/// over pairs, for rows and columns; returns the smaller. n = 1 gives |a_11|.
SpectralBound cassini_bound(const IntegerMatrix& a,
                            std::size_t pair_threshold = kCassiniPairThreshold);

/// min(gershgorin, cassini); method tells which one won.
SpectralBound spectral_radius_bound(const IntegerMatrix& a);

/// Minimal polynomial coefficients of a matrix whose spectral radius is at
/// most beta (clamped to >= 1), for degree d >= 1:
///   d <= beta : beta^d
///   otherwise : min( sqrt(beta d)^d, sqrt(2 / (d pi)) 2^d beta^d ).
CoeffBound lemma3_bound(double beta, std::size_t d);

/// Factor bound 2^d * ||C_A||: bits = d + charpoly.bits. Requires 1 <= d <= n.
CoeffBound mignotte_bound(const CoeffBound& charpoly, std::size_t d, std::size_t n);

/// Smaller of lemma3_bound(spectral_radius_bound(A), d) and
/// mignotte_bound(lemma2_bound(n, B), d, n); meta.winner names it.
CoeffBound best_minpoly_bound(const IntegerMatrix& a, std::size_t d);

}  // namespace polybound
