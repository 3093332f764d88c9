#include <benchmark/benchmark.h>

#include <numbers>

#include "qtam/annealer.hpp"
#include "qtam/complexity.hpp"
#include "qtam/qaoa.hpp"
#include "qtam/router.hpp"
#include "qtam/rng.hpp"

namespace {

qtam::ProblemGraph ring_graph(int n) {
  qtam::ProblemGraph g;
  g.vertices = n;
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

void BM_Evolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto graph = ring_graph(n);
  qtam::ParameterCollections pc;
  pc.mixer.assign(1, std::vector<double>(n, 0.3));
  pc.phase.assign(1, std::vector<double>(graph.edges.size(), 0.7));
  for (auto _ : state) {
    auto psi = qtam::evolve(graph, pc);
    benchmark::DoNotOptimize(psi.amplitudes.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Evolve)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_ShortestPath(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  qtam::GridGraph grid(side, side, 3, 2.0);
  // A diagonal wall with one gap makes the search do real work.
  for (int y = 1; y < side - 1; ++y) grid.block({side / 2, y, 1});
  const qtam::GridVertex src{0, 0, 1};
  const qtam::GridVertex dst{side - 1, side - 1, 3};
  for (auto _ : state) {
    auto route = qtam::qspa_shortest_path(grid, src, dst);
    benchmark::DoNotOptimize(route.cost);
  }
}
BENCHMARK(BM_ShortestPath)->Arg(16)->Arg(32)->Arg(64);

void BM_ArchiveInsert(benchmark::State& state) {
  const int capacity = static_cast<int>(state.range(0));
  qtam::RandomSource rng(7);
  std::vector<qtam::EvaluatedSolution> pool;
  for (int i = 0; i < 256; ++i) {
    qtam::EvaluatedSolution es;
    for (int k = 0; k < 5; ++k)
      es.eval.objectives.f[static_cast<std::size_t>(k)] = rng.uniform();
    es.solution.active_inputs = i + 1;  // keep solutions distinct
    pool.push_back(std::move(es));
  }
  qtam::RangeTracker ranges;
  for (const auto& es : pool) ranges.observe(es.eval.objectives);
  for (auto _ : state) {
    qtam::ParetoArchive archive(capacity);
    for (const auto& es : pool) archive.insert(es, ranges);
    benchmark::DoNotOptimize(archive.size());
  }
}
BENCHMARK(BM_ArchiveInsert)->Arg(16)->Arg(64);

void BM_CostModel(benchmark::State& state) {
  for (auto _ : state) {
    auto rows = qtam::complexity_sweep(1, 100, 9, 1, 500, 49, 3, 5);
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_CostModel);

}  // namespace

BENCHMARK_MAIN();
