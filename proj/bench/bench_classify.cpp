// Serial vs OpenMP edge classification on the family graphs.

#include <benchmark/benchmark.h>

#include "vrank/constructive.hpp"
#include "vrank/oracle.hpp"
#include "vrank/ranking.hpp"

using namespace vrank;

namespace {

const Graph& graph_for(int which) {
  static const Graph graphs[] = {
      build_family(PathFamily{4}),
      build_family(CycleFamily{4}),
      build_family(JoinedCliquesFamily{6}),
      build_family(MultipartiteFamily{{5, 4, 3}}),
  };
  return graphs[which];
}

void classify(benchmark::State& state, Execution exec) {
  const Graph& g = graph_for(static_cast<int>(state.range(0)));
  const auto candidates = non_edges(g);
  for (auto _ : state) {
    auto rep = classify_edges(g, candidates, {}, exec);
    benchmark::DoNotOptimize(rep.good.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(candidates.size()));
  state.SetLabel(std::to_string(g.order()) + " vertices, " + std::to_string(candidates.size()) + " candidates");
}

void BM_ClassifySerial(benchmark::State& state) { classify(state, Execution::Serial); }
void BM_ClassifyParallel(benchmark::State& state) { classify(state, Execution::Parallel); }

void BM_RankNumber(benchmark::State& state) {
  const Graph& g = graph_for(static_cast<int>(state.range(0)));
  const bool memo = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(rank_number(g, {20, memo}).rank);
}

}  // namespace

BENCHMARK(BM_ClassifySerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClassifyParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RankNumber)->ArgsProduct({{0, 1, 2, 3}, {0, 1}})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
