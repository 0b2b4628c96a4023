#include <benchmark/benchmark.h>

#include <random>

#include "splitwise/exact.h"
#include "splitwise/fulltree.h"
#include "splitwise/generators.h"
#include "splitwise/greedy.h"
#include "splitwise/mssc.h"
#include "splitwise/set_cover.h"

namespace splitwise {
namespace {

Instance RandomInstance(int n, int m, WeightProfile profile) {
  RandomSpec spec;
  spec.n = n;
  spec.m = m;
  spec.seed = 1;
  spec.profile = profile;
  return GenerateRandom(spec);
}

SetSystem RandomSystem(int universe, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SetSystem system;
  std::uniform_int_distribution<Weight> weight(1, 30);
  for (int e = 0; e < universe; ++e) system.element_units.push_back(weight(rng));
  system.denominator = 0;
  for (Weight w : system.element_units) system.denominator += w;
  for (int j = 0; j < count; ++j) {
    HypothesisSet s(universe);
    for (int e = 0; e < universe; ++e) {
      if (rng() % 3 == 0) s.insert(e);
    }
    system.sets.push_back(std::move(s));
  }
  system.Uncoverable().ForEach([&](int e) { system.sets[rng() % static_cast<std::size_t>(count)].insert(e); });
  return system;
}

void BM_GreedyGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridInstance grid = GenerateGridAdversarial(n, 8, GridRange::kRelaxed);
  for (auto _ : state) benchmark::DoNotOptimize(BuildGreedyTree(grid.instance));
  state.SetComplexityN(n);
}
BENCHMARK(BM_GreedyGrid)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

void BM_GreedyRandom(benchmark::State& state) {
  const Instance inst = RandomInstance(static_cast<int>(state.range(0)), 24, WeightProfile::kSkewed);
  for (auto _ : state) benchmark::DoNotOptimize(BuildGreedyTree(inst));
}
BENCHMARK(BM_GreedyRandom)->Arg(32)->Arg(128)->Arg(512);

void BM_OptimalTree(benchmark::State& state) {
  const Instance inst = RandomInstance(static_cast<int>(state.range(0)), 10, WeightProfile::kUniform);
  for (auto _ : state) benchmark::DoNotOptimize(OptimalTree(inst));
}
BENCHMARK(BM_OptimalTree)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_PartialTree(benchmark::State& state) {
  const Instance inst = RandomInstance(14, 10, WeightProfile::kTwoTier);
  const int b = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(PartialTree(inst, inst.AllHypotheses(), b));
}
BENCHMARK(BM_PartialTree)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_FullTree(benchmark::State& state) {
  const Instance inst = RandomInstance(static_cast<int>(state.range(0)), 12, WeightProfile::kTwoTier);
  FullTreeConfig cfg;
  cfg.ratio_bound = inst.WeightRatio();
  cfg.depth_override = 3;
  for (auto _ : state) benchmark::DoNotOptimize(FullTree(inst, cfg));
}
BENCHMARK(BM_FullTree)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_MsscGreedy(benchmark::State& state) {
  const SetSystem system = RandomSystem(64, static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(MsscGreedy(system));
}
BENCHMARK(BM_MsscGreedy)->Arg(16)->Arg(64)->Arg(256);

void BM_MsscOptimal(benchmark::State& state) {
  const SetSystem system = RandomSystem(12, static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(MsscOptimal(system));
}
BENCHMARK(BM_MsscOptimal)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_SetCover(benchmark::State& state) {
  const SetSystem system = RandomSystem(16, static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(WeightedGreedyCover(system));
    benchmark::DoNotOptimize(OptimalCoverSize(system));
  }
}
BENCHMARK(BM_SetCover)->Arg(8)->Arg(14);

}  // namespace
}  // namespace splitwise

BENCHMARK_MAIN();
