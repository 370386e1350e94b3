#include <benchmark/benchmark.h>

#include <random>

#include "twolevel/canon.hpp"
#include "twolevel/configuration.hpp"
#include "twolevel/enumerate.hpp"
#include "twolevel/geom.hpp"
#include "twolevel/lattice.hpp"

namespace {

void BM_Closure(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto seed = tl::cube_vertices(d);
  for (auto _ : state) benchmark::DoNotOptimize(tl::closure(seed));
}
BENCHMARK(BM_Closure)->DenseRange(2, 5);

void BM_CanonicalForm(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto cfg = tl::polytope_to_configuration(tl::complete_maximal_pair(tl::cube_vertices(d)));
  const tl::BinaryMatrix m = tl::slack_matrix(cfg).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(tl::canonical_form(m));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(2, 4);

void BM_Enumerate(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tl::enumerate_maximal(d));
}
BENCHMARK(BM_Enumerate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Hnf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> entry(-5, 5);
  tl::IntMatrix m(n + 2, n);
  for (std::size_t r = 0; r < n + 2; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(tl::hnf(m));
}
BENCHMARK(BM_Hnf)->RangeMultiplier(2)->Range(4, 16);

}  // namespace
BENCHMARK_MAIN();
