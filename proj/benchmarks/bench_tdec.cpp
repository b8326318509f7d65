#include <benchmark/benchmark.h>

#include "tdec/bounds.hpp"
#include "tdec/coloring.hpp"
#include "tdec/families.hpp"
#include "tdec/solver.hpp"
#include "tdec/structure.hpp"
#include "tdec/surgery.hpp"

using namespace tdec;

static void BM_SolvePath(benchmark::State& state) {
  Graph g = gen_path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(g).value);
}
BENCHMARK(BM_SolvePath)->Arg(8)->Arg(12)->Arg(16)->Arg(21);

static void BM_SolveCycle(benchmark::State& state) {
  Graph g = gen_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(g).value);
}
BENCHMARK(BM_SolveCycle)->Arg(9)->Arg(13);

static void BM_SolveSubdividedStar(benchmark::State& state) {
  Graph g = subdivide(gen_star(static_cast<int>(state.range(0))), 3).graph;
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(g).value);
}
BENCHMARK(BM_SolveSubdividedStar)->Arg(3)->Arg(4)->Arg(5);

static void BM_OracleEnumeration(benchmark::State& state) {
  Graph g = gen_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_oracle_enumeration(g, g.edge_count()));
}
BENCHMARK(BM_OracleEnumeration)->Arg(7)->Arg(9);

static void BM_Validate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = gen_path(n);
  EdgeColoring witness = construct_path_tdec(n);
  for (auto _ : state) benchmark::DoNotOptimize(validate(g, witness).valid());
}
BENCHMARK(BM_Validate)->Arg(10)->Arg(40);

static void BM_EnumerateCorpus(benchmark::State& state) {
  for (auto _ : state) {
    int count = 0;
    enumerate_labeled_connected_graphs(static_cast<int>(state.range(0)),
                                       [&](const Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateCorpus)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
