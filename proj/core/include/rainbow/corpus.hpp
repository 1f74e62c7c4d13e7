#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/lemma_verify.hpp"

namespace rainbow {

enum class Sampler {
  Rejection,  // uniform edge sets, greedy coloring, reject rainbow-P5 draws
  Growth,     // random maximal growth, never leaves the rainbow-P5-free class
};

/// Seeded samplers for properly colored rainbow-P5-free graphs.
///
/// Rejection: each draw picks n uniformly in [min_vertices, max_vertices], m uniformly in
/// [n, min(n(n-1)/2, max_edge_factor * n)], samples m distinct pairs
/// uniformly, and colors them greedily in sample order with the first color
/// from a palette of Δ + palette_slack colors that stays proper. Draws where
/// the greedy coloring runs out of colors, or that contain a rainbow P5, are
/// rejected.
///
/// Growth: starting from n isolated vertices, proposes growth_steps random
/// (pair, color) insertions with colors from 1..growth_palette; the first
/// endpoint is vertex 0 with probability 1/3. A proposal is kept when the
/// coloring stays proper and no rainbow P5 appears. Uniform sampling almost
/// never keeps a degree-6 vertex after pruning; growth with a hub does.
struct CorpusOptions {
  Sampler sampler = Sampler::Rejection;
  std::uint64_t seed = 0;
  std::size_t instances = 10000;
  std::size_t min_vertices = 6;
  std::size_t max_vertices = 12;
  std::size_t max_edge_factor = 3;
  std::size_t palette_slack = 1;
  std::size_t max_attempts = 1'000'000;  // per instance
  std::size_t growth_palette = 8;
  std::size_t growth_steps = 400;
};

struct CorpusInstance {
  std::size_t id = 0;
  ColoredGraph graph;
  std::size_t attempts = 0;
};

/// Greedy first-fit coloring of `pairs` in order using colors 1..palette
/// (0 = unbounded). Empty optional when a pair has no legal color left.
std::optional<ColoredGraph> greedy_color(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs,
                                         std::size_t palette);

/// m distinct uniformly random pairs on n vertices, in random order.
std::vector<std::pair<Vertex, Vertex>> sample_pairs(std::size_t n, std::size_t m, std::mt19937_64& rng);

/// Instance `id` depends only on (options.seed, id).
CorpusInstance generate_instance(const CorpusOptions& options, std::size_t id);
std::vector<CorpusInstance> generate_corpus(const CorpusOptions& options, unsigned jobs = 1);

struct HarnessStats {
  std::size_t instances = 0;
  std::size_t total_attempts = 0;
  std::size_t nonempty_after_prune = 0;      // prune_min_degree(g, 3) non-empty
  std::size_t with_degree6_after_prune = 0;  // some vertex of degree >= 6 survives
  std::size_t with_qualifying_vertex = 0;    // some v in V'' with d(v) >= 6 after pruning
  std::size_t qualifying_vertices = 0;
  std::size_t pairings_found = 0;
  std::size_t pairings_missing = 0;
  std::size_t reached_p3_gate = 0;           // instances inside the heavy-component domain
  std::size_t main_theorem_survivors = 0;    // instances where preprocess is non-empty
};

struct HarnessResult {
  std::vector<LemmaReport> reports;  // one per requested lemma, in request order
  HarnessStats stats;
};

/// Runs the requested lemmas over the corpus. CycleAverage and MainTheorem
/// see each raw instance; the others see prune_min_degree(instance, 3).
/// Aggregated reports count the instances each lemma actually ran on; the
/// first violation (lowest instance id) is kept. Output is independent of
/// `jobs`.
HarnessResult run_harness(const CorpusOptions& options, std::span<const LemmaId> lemmas,
                          unsigned jobs = 1);

}  // namespace rainbow
