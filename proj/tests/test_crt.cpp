#include <cmath>
#include <random>

#include "doctest.h"
#include "polybound/charpoly_bounds.hpp"
#include "polybound/crt.hpp"
#include "polybound/minpoly_bounds.hpp"
#include "polybound/oracle.hpp"
#include "support/generators.hpp"

using namespace polybound;

namespace {

CoeffBound bits(double b) {
  CoeffBound out;
  out.bits = b;
  return out;
}

}  // namespace

TEST_CASE("plan_primes") {
  const auto example = bits(std::log2(80.66661));
  const auto small = plan_primes(example, 3);
  CHECK(small.primes == std::vector<std::uint64_t>{7, 5, 3, 2});
  CHECK(small.product == 210);
  CHECK_FALSE(covers(105, example.bits));

  const auto trivial = plan_primes(bits(0.0), 31);
  CHECK(trivial.primes.size() == 1);
  CHECK(plan_primes(bits(0.0), 2).primes == std::vector<std::uint64_t>{3});

  const auto big = plan_primes(example, 31);
  CHECK(big.primes == std::vector<std::uint64_t>{2147483647});

  CHECK_THROWS_AS(plan_primes(bits(20.0), 3), PrimeExhaustedError);
  CHECK_THROWS_AS(plan_primes(bits(-1.0), 31), std::invalid_argument);
}

TEST_CASE("property: plans are minimal and distinct") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> db(0.0, 600.0);
  std::uniform_int_distribution<int> dbits(8, 62);
  for (int t = 0; t < 100; ++t) {
    const auto bound = bits(db(rng));
    const auto plan = plan_primes(bound, dbits(rng));
    Integer prod = 1;
    for (auto p : plan.primes) prod *= static_cast<unsigned long>(p);
    CHECK(prod == plan.product);
    CHECK(covers(plan.product, bound.bits));
    Integer without_last = plan.product / static_cast<unsigned long>(plan.primes.back());
    CHECK_FALSE(covers(without_last, bound.bits));
    auto sorted = plan.primes;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
}

TEST_CASE("crt_combine") {
  std::vector<ResidueOf> r{{3, 5}, {3, 7}};
  CHECK(crt_combine(r) == 3);
  r = {{3, 5}, {5, 7}};
  CHECK(crt_combine(r) == -2);
  for (std::uint64_t p : {3ull, 101ull, 2147483647ull}) {
    r = {{0, p}};
    CHECK(crt_combine(r) == 0);
  }
  CHECK(crt_combine(std::span<const ResidueOf>{}) == 0);
  r = {{1, 6}, {1, 9}};
  CHECK_THROWS_AS(crt_combine(r), NonCoprimeModuliError);
  r = {{1, 2}, {0, 3}};  // even product: M/2 = 3 lifts to +3
  CHECK(crt_combine(r) == 3);
}

TEST_CASE("property: symmetric lift round trip") {
  std::mt19937_64 rng(2);
  gmp_randclass gmp(gmp_randinit_default);
  gmp.seed(7);
  for (int t = 0; t < 500; ++t) {
    const auto plan = plan_primes(bits(1.0 + 5.0 * (t % 40)), 20 + t % 40);
    Integer half = plan.product / 2;
    Integer x = gmp.get_z_range(2 * half + 1) - half;
    std::vector<ResidueOf> r;
    for (auto p : plan.primes) r.push_back({mpz_fdiv_ui(x.get_mpz_t(), p), p});
    CHECK(crt_combine(r) == x);
  }
}

TEST_CASE("reconstruct_charpoly") {
  const auto ex = reconstruct_charpoly(testing::example5());
  CHECK(ex.polynomial == IntPolynomial({48, -80, 40, 0, -5, 1}));
  CHECK(ex.plan.primes.size() == 1);
  CHECK(reconstruct_charpoly(IntegerMatrix::identity(4)).polynomial ==
        IntPolynomial({1, -4, 6, -4, 1}));
  CHECK(reconstruct_charpoly(IntegerMatrix(3)).polynomial == IntPolynomial({0, 0, 0, 1}));

  // Small primes force a multi-prime plan.
  ReconstructOptions opts;
  opts.prime_bits = 5;
  const auto multi = reconstruct_charpoly(testing::example5(), opts);
  CHECK(multi.plan.primes.size() > 1);
  CHECK(multi.polynomial == IntPolynomial({48, -80, 40, 0, -5, 1}));
}

TEST_CASE("property: reconstruct_charpoly matches the oracle") {
  testing::Rng rng(77);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + t % 8;
    const long b = t % 4 == 0 ? 1000000007L : 1 + t % 40;
    const auto a = testing::uniform_matrix(rng, n, b);
    ReconstructOptions opts;
    opts.prime_bits = 10 + t % 50;
    opts.threads = 1 + t % 3;
    const auto r = reconstruct_charpoly(a, opts);
    CHECK(r.polynomial == oracle::charpoly(a));
    CHECK(covers(r.plan.product, r.plan.bound.bits));
  }
}

TEST_CASE("reconstruct_minpoly") {
  const auto id = reconstruct_minpoly(IntegerMatrix::identity(5));
  CHECK(id.polynomial == IntPolynomial({-1, 1}));
  CHECK(id.plan.primes.size() == 1);

  const auto companion = IntegerMatrix::from_rows({{0, 0, 5}, {1, 0, 2}, {0, 1, 0}});
  CHECK(reconstruct_minpoly(companion).polynomial == IntPolynomial({-5, -2, 0, 1}));
  CHECK(oracle::minpoly(companion) == IntPolynomial({-5, -2, 0, 1}));

  const auto ex = reconstruct_minpoly(testing::example5());
  CHECK(ex.polynomial == oracle::minpoly(testing::example5()));
  CHECK(ex.polynomial == IntPolynomial({-6, 1, 1}));
  CHECK(log2_abs(ex.polynomial.infinity_norm()) <=
        best_minpoly_bound(testing::example5(), 2).bits);
}

TEST_CASE("reconstruct_minpoly discards bad primes") {
  // diag(1, 1 + 61*59) has degree-1 images modulo the first two 6-bit primes.
  const auto a = IntegerMatrix::diagonal(std::vector<long>{1, 3600});
  ReconstructOptions opts;
  opts.prime_bits = 6;  // stream 61, 59, 53, 47, ...
  const auto r = reconstruct_minpoly(a, opts);
  CHECK(r.polynomial == IntPolynomial({3600, -3601, 1}));
  CHECK(r.discarded == std::vector<std::uint64_t>{61, 59});
  CHECK(std::find(r.plan.primes.begin(), r.plan.primes.end(), 61) == r.plan.primes.end());
  CHECK(r.attempts == 1);
}

TEST_CASE("reconstruct_minpoly reports exhaustion") {
  const auto a = IntegerMatrix::diagonal(std::vector<long>{1, 1000});
  ReconstructOptions opts;
  opts.prime_bits = 3;
  CHECK_THROWS_AS(reconstruct_minpoly(a, opts), PrimeExhaustedError);
}

TEST_CASE("property: reconstruct_minpoly matches the oracle") {
  testing::Rng rng(55);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + t % 8;
    const auto a = testing::minpoly_case(rng, n, static_cast<std::size_t>(t));
    ReconstructOptions opts;
    opts.threads = 1 + t % 2;
    opts.prime_bits = t % 5 == 0 ? 8 : 31;
    const auto r = reconstruct_minpoly(a, opts);
    CHECK(r.polynomial == oracle::minpoly(a));
  }
}

TEST_CASE("threads from environment") {
  setenv("POLYBOUND_THREADS", "3", 1);
  CHECK(threads_from_environment() == 3);
  setenv("POLYBOUND_THREADS", "junk", 1);
  CHECK(threads_from_environment() == 0);
  unsetenv("POLYBOUND_THREADS");
  CHECK(threads_from_environment() == 0);
}
