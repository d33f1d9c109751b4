#include <benchmark/benchmark.h>

#include "polybound/polybound.hpp"
#include "support/generators.hpp"

using namespace polybound;

// The closed form costs O(1); the window search O(sqrt(n) / B) steps.
static void BM_Lemma1(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Integer b = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(lemma1_bound(n, b).bits);
}
BENCHMARK(BM_Lemma1)->ArgsProduct({{16, 1024, 65536, 1 << 22}, {1, 1000}});

static void BM_Lemma2(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Integer b = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(lemma2_bound(n, b).bits);
  state.counters["scanned"] = static_cast<double>(*lemma2_bound(n, b).meta.scanned);
}
BENCHMARK(BM_Lemma2)->ArgsProduct({{16, 1024, 65536, 1 << 22}, {1, 1000}});

static void BM_SpectralRadius(benchmark::State& state) {
  testing::Rng rng(7);
  const auto a = testing::uniform_matrix(rng, static_cast<std::size_t>(state.range(0)), 100);
  a.stats();
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius_bound(a).beta);
}
BENCHMARK(BM_SpectralRadius)->RangeMultiplier(4)->Range(8, 512);
