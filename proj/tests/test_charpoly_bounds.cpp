#include <cmath>
#include <random>

#include "doctest.h"
#include "polybound/charpoly_bounds.hpp"
#include "polybound/oracle.hpp"
#include "support/generators.hpp"

using namespace polybound;

TEST_CASE("hadamard_bound") {
  CHECK(hadamard_bound(5, 1).value() == doctest::Approx(55.9017).epsilon(1e-6));
  CHECK(hadamard_bound(4, 1).value() == doctest::Approx(16.0));
  CHECK(hadamard_bound(3, 0).bits == 0.0);
  CHECK(hadamard_bound(4, 1).method == BoundMethod::hadamard);

  // Exhaustive over all 2x2 matrices with entries in [-3, 3]: max |det| = 18.
  long best = 0;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c)
        for (long d = -3; d <= 3; ++d) best = std::max(best, std::labs(a * d - b * c));
  CHECK(best == 18);
  CHECK(hadamard_bound(2, 3).value() == doctest::Approx(18.0));
  CHECK(oracle::determinant(IntegerMatrix::from_rows({{3, -3}, {3, 3}})) == 18);
}

TEST_CASE("lemma1_bound") {
  CHECK(lemma1_bound(5, 1).value() == doctest::Approx(80.66661).epsilon(1e-5));
  CHECK(lemma1_bound(5, 1).value() >= 80.0);
  const double bits6 = lemma1_bound(6, 1).bits;
  CHECK(bits6 == doctest::Approx(3.0 * (std::log2(6.0) + kClosedFormConstant)));
  CHECK(bits6 == doctest::Approx(8.390).epsilon(1e-3));
  for (std::size_t j = 0; j <= 6; ++j) CHECK(oracle::fnj_log2(6, 1, j) <= bits6);
  CHECK(lemma1_bound(4, 0).bits > 0.0);
  CHECK(lemma1_bound(8, 1000).bits ==
        doctest::Approx(4.0 * (3.0 + 2.0 * std::log2(1000.0) + kClosedFormConstant)));
}

TEST_CASE("small n: both bounds equal the exhaustive maximum") {
  for (std::size_t n = 1; n < 4; ++n) {
    for (long b : {1L, 2L, 9L}) {
      double best = 0.0;
      for (std::size_t j = 0; j <= n; ++j) best = std::max(best, oracle::fnj_log2(n, b, j));
      const auto bound = lemma1_bound(n, b);
      CHECK(bound.bits == doctest::Approx(best).epsilon(1e-12));
      CHECK(bound.meta.fallback_n == n);
      const auto searched = lemma2_bound(n, b);
      CHECK(searched.bits == doctest::Approx(best).epsilon(1e-12));
      CHECK(*searched.meta.scanned <= static_cast<std::size_t>(std::ceil(j_window(n, b))) + 1);
    }
  }
  CHECK(lemma1_bound(3, 0).bits == 0.0);
}

TEST_CASE("fnj_log") {
  CHECK(std::exp2(fnj_log(5, 1, 1)) == doctest::Approx(80.0).epsilon(1e-12));
  CHECK(std::exp2(fnj_log(5, 1, 0)) == doctest::Approx(55.9017).epsilon(1e-6));
  CHECK(std::exp2(fnj_log(4, 2, 2)) == doctest::Approx(48.0).epsilon(1e-12));
  CHECK(fnj_log(7, 3, 7) == doctest::Approx(0.0));
  CHECK_THROWS_AS(fnj_log(4, 1, 5), std::domain_error);
  CHECK_THROWS_AS(fnj_log_direct(4, 1, 5), std::domain_error);
}

TEST_CASE("property: recursive scheme agrees with direct evaluation") {
  for (long b : {1L, 10L, 1000L}) {
    for (std::size_t n = 1; n <= 200; n += 7) {
      for (std::size_t j = 0; j <= n; ++j) {
        const double rec = fnj_log(n, b, j);
        const double exact = oracle::fnj_log2(n, b, j);
        CHECK(std::fabs(rec - fnj_log_direct(n, b, j)) <= 1e-9 * std::max(1.0, std::fabs(exact)));
        CHECK(std::fabs(rec - exact) <= 1e-9 * std::max(1.0, std::fabs(exact)));
      }
    }
  }
}

TEST_CASE("j_window") {
  CHECK(j_window(5, 1) == doctest::Approx(1.183).epsilon(0.01 / 1.183));
  CHECK(j_window(5, 1) == doctest::Approx(1.18645).epsilon(1e-5));
  CHECK(j_window(4, 1000) < 1.0);
  CHECK(j_window(4, 1000) == doctest::Approx(1.2e-3).epsilon(0.05));
  CHECK(j_window(5, 0) == j_window(5, 1));
  double prev = j_window(50, 1);
  for (long b = 2; b < 5000; b = b * 3 / 2 + 1) {
    const double w = j_window(50, b);
    CHECK(w < prev);
    prev = w;
  }
  CHECK(j_window(10, Integer("1" + std::string(400, '0'))) >= 0.0);
}

TEST_CASE("lemma2_bound") {
  SUBCASE("example") {
    const auto b = lemma2_bound(5, 1);
    CHECK(b.value() == doctest::Approx(80.0).epsilon(1e-12));
    CHECK(b.meta.argmax_j == 1u);
    CHECK(b.meta.scanned == 3u);
    CHECK(b.method == BoundMethod::lemma2_search);
  }
  SUBCASE("large entries: only the Hadamard term") {
    const auto b = lemma2_bound(4, 1000);
    CHECK(b.value() == doctest::Approx(1.6e13).epsilon(1e-12));
    CHECK(b.meta.argmax_j == 0u);
    CHECK(b.meta.scanned == 2u);  // j = 0 plus ceil(window) = 1, capped at floor(n/2)
  }
  SUBCASE("zero matrix") {
    CHECK(lemma2_bound(6, 0).bits == 0.0);
  }
}

TEST_CASE("property: lemma2 is dominated by lemma1") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> dn(4, 64);
  std::uniform_int_distribution<long> db(1, 1L << 20);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = dn(rng);
    const long b = t % 4 == 0 ? 1 + t % 9 : db(rng);
    CHECK(lemma2_bound(n, b).bits <= lemma1_bound(n, b).bits + 1e-6);
  }
}

TEST_CASE("property: window contains the global maximiser") {
  for (std::size_t n = 4; n <= 40; ++n) {
    for (long b = 1; b <= 8; ++b) {
      std::size_t argmax = 0;
      double best = -1.0;
      for (std::size_t j = 0; j <= n / 2; ++j) {
        const double v = oracle::fnj_log2(n, b, j);
        if (v > best) {
          best = v;
          argmax = j;
        }
      }
      INFO("n=" << n << " B=" << b);
      CHECK(argmax <= static_cast<std::size_t>(std::ceil(j_window(n, b))));
      CHECK(lemma2_bound(n, b).bits == doctest::Approx(best).epsilon(1e-12));
    }
  }
}

TEST_CASE("property: scanned count respects the window") {
  for (long b : {1L, 2L, 10L, 1000L}) {
    for (std::size_t n = 1; n <= 200; ++n) {
      const auto bound = lemma2_bound(n, b);
      CHECK(*bound.meta.scanned <= static_cast<std::size_t>(std::ceil(j_window(n, b))) + 1);
    }
  }
}

TEST_CASE("property: bounds hold for random matrices") {
  testing::Rng rng(99);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 4 + t % 5;
    const long b = t % 3 == 0 ? 1 : 1 + t % 7;
    const auto a = t % 2 ? testing::uniform_matrix(rng, n, b) : testing::sign_pattern_matrix(rng, n, b);
    const double actual = log2_abs(oracle::charpoly(a).infinity_norm());
    CHECK(actual <= lemma2_bound(n, a.max_abs()).bits + 1e-9);
    CHECK(actual <= lemma1_bound(n, a.max_abs()).bits + 1e-9);
  }
}
