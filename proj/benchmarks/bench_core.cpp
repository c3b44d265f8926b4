#include <benchmark/benchmark.h>

#include "redlab/classification.hpp"
#include "redlab/redundancy.hpp"
#include "redlab/zariski.hpp"

using namespace redlab;

namespace {

HJString threes(std::size_t l) { return HJString(std::vector<int>(l, 3)); }

void BM_ChainDeterminant(benchmark::State& state) {
  const auto m = intersection_matrix(chain_graph(threes(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ChainDeterminant)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_ChainDiscrepancies(benchmark::State& state) {
  const auto g = chain_graph(threes(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(discrepancies(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ChainDiscrepancies)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_HJRoundTrip(benchmark::State& state) {
  const auto s = threes(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto f = hj_eval(s);
    benchmark::DoNotOptimize(hj_expand(f.q, f.q1));
  }
}
BENCHMARK(BM_HJRoundTrip)->Arg(8)->Arg(64)->Arg(512);

void BM_RedundantPoints(benchmark::State& state) {
  const auto g = chain_graph(HJString({2, 3, 3, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(redundant_points(negative_part(g)));
}
BENCHMARK(BM_RedundantPoints);

void BM_EnumerateSequences(benchmark::State& state) {
  const auto c = negative_part(chain_graph(HJString({static_cast<int>(state.range(0)), static_cast<int>(state.range(0))})));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sequences(c, 64));
}
BENCHMARK(BM_EnumerateSequences)->Arg(4)->Arg(8)->Arg(12);

void BM_ZariskiSmn(benchmark::State& state) {
  const auto m = static_cast<int>(state.range(0));
  const auto f = fixture_smn(m, m);
  for (auto _ : state) benchmark::DoNotOptimize(zariski_decompose(f.lattice, f.anticanonical, f.curves));
}
BENCHMARK(BM_ZariskiSmn)->Arg(4)->Arg(8)->Arg(16);

void BM_ClassificationSweep(benchmark::State& state) {
  SweepBounds bounds;
  bounds.a_max_len = static_cast<int>(state.range(0));
  bounds.a_max_weight = 6;
  bounds.d_max_b = 2;
  bounds.d_max_arm_len = 1;
  bounds.d_max_arm_weight = 2;
  bounds.bracket_max_b = 2;
  for (auto _ : state) benchmark::DoNotOptimize(verify_classification(bounds, 1));
}
BENCHMARK(BM_ClassificationSweep)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
