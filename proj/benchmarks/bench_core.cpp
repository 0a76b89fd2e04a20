#include <benchmark/benchmark.h>

#include "eigensym/rng.hpp"
#include "eigensym/span_analysis.hpp"

namespace {

using namespace eigensym;

Graph random_graph(int n, double p, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform() < p) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

void BM_AutomorphismPetersen(benchmark::State& state) {
  const Graph g = builtin("petersen", 0);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order());
}
BENCHMARK(BM_AutomorphismPetersen);

void BM_AutomorphismCycle(benchmark::State& state) {
  const Graph g = builtin("cycle", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order());
}
BENCHMARK(BM_AutomorphismCycle)->Arg(8)->Arg(32)->Arg(128);

void BM_AutomorphismComplete(benchmark::State& state) {
  const Graph g = builtin("complete", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order());
}
BENCHMARK(BM_AutomorphismComplete)->Arg(6)->Arg(8);

void BM_JacobiRandomGraph(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_eig(g.adjacency()).pairs.size());
}
BENCHMARK(BM_JacobiRandomGraph)->Arg(16)->Arg(32)->Arg(64);

void BM_DecomposePetersen(benchmark::State& state) {
  const Graph g = builtin("petersen", 0);
  const PermGroup group = automorphism_group(g);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_decomposition(Subspace::full(10), group).h());
}
BENCHMARK(BM_DecomposePetersen);

void BM_DecomposeCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = builtin("cycle", n);
  const PermGroup group = automorphism_group(g);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_decomposition(Subspace::full(n), group).h());
}
BENCHMARK(BM_DecomposeCycle)->Arg(8)->Arg(16);

void BM_SpanClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = builtin("cycle", n);
  const PermGroup group = automorphism_group(g);
  const auto v = random_vector(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(span_G(v, group.generators()).dim());
}
BENCHMARK(BM_SpanClosure)->Arg(10)->Arg(40);

void BM_SpanFormulaPetersen(benchmark::State& state) {
  const Graph g = builtin("petersen", 0);
  const PermGroup group = automorphism_group(g);
  const auto cd = canonical_decomposition(Subspace::full(10), group);
  const auto psi = reference_intertwiners(cd, group.generators());
  const auto v = random_vector(10, 4);
  for (auto _ : state) benchmark::DoNotOptimize(dim_span_formula(v, cd, psi, group).dim_formula);
}
BENCHMARK(BM_SpanFormulaPetersen);

}  // namespace
BENCHMARK_MAIN();
