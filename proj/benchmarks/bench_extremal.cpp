#include <benchmark/benchmark.h>

#include "rainbow/canonical.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/extremal_search.hpp"

namespace {

using namespace rainbow;

void BM_EnumerateGraphs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t total = 0;
  for (auto _ : state) {
    GraphEnumerator e(n);
    total = 0;
    for (std::size_t m = 0; m <= e.max_edges(); ++m) total += e.level(m).size();
    benchmark::DoNotOptimize(total);
  }
  state.counters["graphs"] = static_cast<double>(total);
}
BENCHMARK(BM_EnumerateGraphs)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  // the cube Q3 has a large automorphism group (48), a hard case for refinement
  const auto cube = build_folded_cube(4);
  SmallGraph g(8);
  for (const auto& e : cube.edges()) {
    if (e.color != 4) g.add_edge(e.u, e.v);
  }
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Unit(benchmark::kMicrosecond);

void BM_ColoringSearchK4(benchmark::State& state) {
  const std::vector<std::pair<Vertex, Vertex>> k4 = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  ColoringOptions opts;
  opts.break_color_symmetry = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(admits_rainbow_free_coloring(4, k4, Pattern::path(3), opts));
  }
}
BENCHMARK(BM_ColoringSearchK4)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_ExStar(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = Pattern::path(static_cast<int>(state.range(1)));
  std::size_t value = 0;
  for (auto _ : state) value = ex_star_exact(n, p).value;
  state.counters["value"] = static_cast<double>(value);
}
BENCHMARK(BM_ExStar)->Args({5, 3})->Args({6, 3})->Args({6, 4})->Args({7, 4})->Unit(benchmark::kMillisecond);

void BM_CertifyMaximal(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const auto g = build_folded_cube(l);
  for (auto _ : state) benchmark::DoNotOptimize(certify_maximal(g, Pattern::path(l)));
}
BENCHMARK(BM_CertifyMaximal)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace
