#include <benchmark/benchmark.h>

#include "rainbow/constructions.hpp"
#include "rainbow/corpus.hpp"
#include "rainbow/graph_ops.hpp"
#include "rainbow/lemma_verify.hpp"
#include "rainbow/rainbow_search.hpp"

namespace {

using namespace rainbow;

void BM_CountCycleOnFoldedCube(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const auto g = build_folded_cube(l);
  const auto p = Pattern::cycle(l);
  for (auto _ : state) benchmark::DoNotOptimize(count_rainbow(g, p));
  state.counters["vertices"] = static_cast<double>(g.vertex_count());
}
BENCHMARK(BM_CountCycleOnFoldedCube)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

void BM_CountC5OnCopies(benchmark::State& state) {
  const auto g = build_lower_bound(static_cast<std::size_t>(state.range(0)), 5);
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_rainbow(g, Pattern::cycle(5), jobs));
}
BENCHMARK(BM_CountC5OnCopies)->Args({32, 1})->Args({256, 1})->Args({256, 2})->Unit(benchmark::kMillisecond);

// Exhausting the search on a rainbow-free graph is the worst case.
void BM_FindPathOnFreeCube(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const auto g = build_folded_cube(l);
  for (auto _ : state) benchmark::DoNotOptimize(is_rainbow_free(g, Pattern::path(l)));
}
BENCHMARK(BM_FindPathOnFreeCube)->DenseRange(4, 7)->Unit(benchmark::kMicrosecond);

void BM_C5Membership(benchmark::State& state) {
  const auto g = build_lower_bound(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(rainbow_c5_membership(g));
}
BENCHMARK(BM_C5Membership)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Preprocess(benchmark::State& state) {
  const auto g = build_lower_bound(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(preprocess(g));
}
BENCHMARK(BM_Preprocess)->Arg(1 << 10)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_Harness(benchmark::State& state) {
  CorpusOptions opts;
  opts.instances = static_cast<std::size_t>(state.range(0));
  opts.sampler = state.range(1) == 0 ? Sampler::Rejection : Sampler::Growth;
  for (auto _ : state) benchmark::DoNotOptimize(run_harness(opts, all_lemmas()));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * state.range(0)));
}
BENCHMARK(BM_Harness)->Args({500, 0})->Args({500, 1})->Unit(benchmark::kMillisecond);

}  // namespace
