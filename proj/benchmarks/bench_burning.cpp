#include <benchmark/benchmark.h>

#include "burning/bounds.hpp"
#include "burning/construct.hpp"
#include "burning/generators.hpp"
#include "burning/solver.hpp"

namespace {

using namespace burning;

void BM_ExactPath(benchmark::State& state) {
  const Tree t = gen_path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(burning_number(t).burning_number);
}
BENCHMARK(BM_ExactPath)->DenseRange(10, 30, 5);

void BM_ExactRandomTree(benchmark::State& state) {
  const Tree t = gen_random_tree(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(burning_number(t).burning_number);
}
BENCHMARK(BM_ExactRandomTree)->DenseRange(10, 30, 5);

void BM_NaiveRandomTree(benchmark::State& state) {
  const Tree t = gen_random_tree(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(burning_number_naive(t).burning_number);
}
BENCHMARK(BM_NaiveRandomTree)->DenseRange(6, 10, 2);

void BM_ConstructGeneral(benchmark::State& state) {
  const Tree t = gen_random_tree(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(construct_general(t).sequence.length());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConstructGeneral)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_ConstructNoDeg2(benchmark::State& state) {
  const Tree t = gen_random_no_deg2(static_cast<std::size_t>(state.range(0)), 7);
  const std::uint64_t m = m_of(t.order());
  for (auto _ : state) benchmark::DoNotOptimize(construct_no_deg2(t, m).sequence.length());
}
BENCHMARK(BM_ConstructNoDeg2)->RangeMultiplier(4)->Range(16, 4096);

void BM_BoundSweep(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::uint64_t acc = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) acc += bound_main1(n, n / 7);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BoundSweep)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
