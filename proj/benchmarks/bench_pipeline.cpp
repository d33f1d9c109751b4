#include <benchmark/benchmark.h>

#include "polybound/polybound.hpp"
#include "support/generators.hpp"

using namespace polybound;

static void BM_CharpolyMod(benchmark::State& state) {
  testing::Rng rng(11);
  const auto a = testing::uniform_matrix(rng, static_cast<std::size_t>(state.range(0)), 1000);
  const auto m = reduce_mod(a, 2147483647);
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_mod(m));
}
BENCHMARK(BM_CharpolyMod)->RangeMultiplier(2)->Range(8, 256);

static void BM_ReconstructCharpoly(benchmark::State& state) {
  testing::Rng rng(13);
  const auto a = testing::uniform_matrix(rng, static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_charpoly(a));
}
BENCHMARK(BM_ReconstructCharpoly)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

static void BM_ReconstructMinpoly(benchmark::State& state) {
  testing::Rng rng(17);
  const auto a = testing::similar_jordan_matrix(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_minpoly(a));
}
BENCHMARK(BM_ReconstructMinpoly)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond);

static void BM_OracleCharpoly(benchmark::State& state) {
  testing::Rng rng(13);
  const auto a = testing::uniform_matrix(rng, static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::charpoly(a));
}
BENCHMARK(BM_OracleCharpoly)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
