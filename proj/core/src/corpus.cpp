#include "rainbow/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "rainbow/errors.hpp"
#include "rainbow/graph_ops.hpp"
#include "rainbow/rainbow_search.hpp"

namespace rainbow {

std::optional<ColoredGraph> greedy_color(std::size_t n,
                                         std::span<const std::pair<Vertex, Vertex>> pairs,
                                         std::size_t palette) {
  std::vector<std::vector<Color>> at(n);
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    Color c = 1;
    auto taken = [&](Color x) {
      return std::find(at[u].begin(), at[u].end(), x) != at[u].end() ||
             std::find(at[v].begin(), at[v].end(), x) != at[v].end();
    };
    while (taken(c)) ++c;
    if (palette != 0 && c > palette) return std::nullopt;
    at[u].push_back(c);
    at[v].push_back(c);
    edges.push_back({u, v, c});
  }
  return ColoredGraph(n, std::move(edges));
}

std::vector<std::pair<Vertex, Vertex>> sample_pairs(std::size_t n, std::size_t m,
                                                    std::mt19937_64& rng) {
  std::vector<std::pair<Vertex, Vertex>> all;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  if (m > all.size()) throw PreconditionError("more edges requested than vertex pairs");
  // partial Fisher-Yates
  for (std::size_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
    std::swap(all[i], all[pick(rng)]);
  }
  all.resize(m);
  return all;
}

namespace {

ColoredGraph grow_instance(std::size_t n, const CorpusOptions& options, std::mt19937_64& rng) {
  if (options.growth_palette == 0) throw PreconditionError("growth_palette must be positive");
  const auto p5 = Pattern::path(5);
  std::uniform_int_distribution<Vertex> pick_vertex(0, static_cast<Vertex>(n - 1));
  std::uniform_int_distribution<Color> pick_color(1, static_cast<Color>(options.growth_palette));
  ColoredGraph g(n);
  for (std::size_t step = 0; step < options.growth_steps; ++step) {
    const Vertex u = rng() % 3 == 0 ? 0 : pick_vertex(rng);
    const Vertex v = pick_vertex(rng);
    const Color c = pick_color(rng);
    if (u == v || g.has_edge(u, v)) continue;
    auto clash = [c](const Incidence& inc) { return inc.color == c; };
    if (std::ranges::any_of(g.neighbors(u), clash) || std::ranges::any_of(g.neighbors(v), clash)) {
      continue;
    }
    auto next = g.with_edge({u, v, c});
    // any new rainbow P5 passes through the new edge, hence through u
    if (find_rainbow(next, p5, Anchor{u, AnchorRole::Member})) continue;
    g = std::move(next);
  }
  return g;
}

}  // namespace

CorpusInstance generate_instance(const CorpusOptions& options, std::size_t id) {
  if (options.min_vertices < 2 || options.min_vertices > options.max_vertices) {
    throw PreconditionError("corpus needs 2 <= min_vertices <= max_vertices");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                    static_cast<std::uint32_t>(options.seed >> 32), static_cast<std::uint32_t>(id),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(id) >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::size_t> pick_n(options.min_vertices, options.max_vertices);
  const auto p5 = Pattern::path(5);
  if (options.sampler == Sampler::Growth) {
    const std::size_t n = pick_n(rng);
    return CorpusInstance{id, grow_instance(n, options, rng), 1};
  }

  for (std::size_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
    const std::size_t n = pick_n(rng);
    const std::size_t max_m = std::min(n * (n - 1) / 2, options.max_edge_factor * n);
    const std::size_t min_m = std::min(n, max_m);
    std::uniform_int_distribution<std::size_t> pick_m(min_m, max_m);
    const auto pairs = sample_pairs(n, pick_m(rng), rng);

    std::vector<std::size_t> degree(n, 0);
    for (auto [u, v] : pairs) {
      ++degree[u];
      ++degree[v];
    }
    const std::size_t max_degree = *std::max_element(degree.begin(), degree.end());
    auto colored = greedy_color(n, pairs, std::max<std::size_t>(1, max_degree + options.palette_slack));
    if (!colored || !is_rainbow_free(*colored, p5)) continue;
    return CorpusInstance{id, std::move(*colored), attempt};
  }
  throw PreconditionError("corpus instance " + std::to_string(id) + " not found within " +
                          std::to_string(options.max_attempts) + " attempts");
}

namespace {

template <class Work>
void parallel_for(std::size_t count, unsigned jobs, const Work& work) {
  jobs = std::max(1U, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    });
  }
}

struct InstanceOutcome {
  std::vector<LemmaReport> reports;
  HarnessStats stats;
};

bool uses_pruned_graph(LemmaId id) {
  return id != LemmaId::CycleAverage && id != LemmaId::MainTheorem;
}

InstanceOutcome evaluate(const CorpusInstance& inst, std::span<const LemmaId> lemmas) {
  InstanceOutcome out;
  const auto& g = inst.graph;
  const auto pruned = prune_min_degree(g, 3);
  auto& s = out.stats;
  s.instances = 1;
  s.total_attempts = inst.attempts;
  s.nonempty_after_prune = pruned.empty() ? 0 : 1;
  s.main_theorem_survivors = preprocess(g).empty() ? 0 : 1;

  if (!pruned.empty()) {
    const auto part = partition_by_rainbow_c5(pruned);
    for (Vertex v = 0; v < pruned.vertex_count(); ++v) {
      if (pruned.degree(v) >= 6) s.with_degree6_after_prune = 1;
    }
    for (Vertex v : part.out_c5) {
      if (pruned.degree(v) < 6) continue;
      ++s.qualifying_vertices;
      s.with_qualifying_vertex = 1;
      (find_local_pairing(pruned, v) ? s.pairings_found : s.pairings_missing) += 1;
    }
  }

  for (auto id : lemmas) {
    auto r = run_lemma(id, uses_pruned_graph(id) ? pruned : g);
    if (id == LemmaId::P3Endpoint && !pruned.empty() && r.status != LemmaStatus::DomainError) {
      s.reached_p3_gate = 1;
    }
    out.reports.push_back(std::move(r));
  }
  return out;
}

void accumulate(HarnessStats& total, const HarnessStats& s) {
  total.instances += s.instances;
  total.total_attempts += s.total_attempts;
  total.nonempty_after_prune += s.nonempty_after_prune;
  total.with_degree6_after_prune += s.with_degree6_after_prune;
  total.with_qualifying_vertex += s.with_qualifying_vertex;
  total.qualifying_vertices += s.qualifying_vertices;
  total.pairings_found += s.pairings_found;
  total.pairings_missing += s.pairings_missing;
  total.reached_p3_gate += s.reached_p3_gate;
  total.main_theorem_survivors += s.main_theorem_survivors;
}

}  // namespace

std::vector<CorpusInstance> generate_corpus(const CorpusOptions& options, unsigned jobs) {
  std::vector<CorpusInstance> corpus(options.instances);
  parallel_for(options.instances, jobs,
               [&](std::size_t i) { corpus[i] = generate_instance(options, i); });
  return corpus;
}

HarnessResult run_harness(const CorpusOptions& options, std::span<const LemmaId> lemmas,
                          unsigned jobs) {
  std::vector<InstanceOutcome> outcomes(options.instances);
  parallel_for(options.instances, jobs, [&](std::size_t i) {
    outcomes[i] = evaluate(generate_instance(options, i), lemmas);
  });

  HarnessResult result;
  for (auto id : lemmas) {
    LemmaReport r;
    r.id = id;
    result.reports.push_back(r);
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    accumulate(result.stats, outcomes[i].stats);
    for (std::size_t k = 0; k < lemmas.size(); ++k) {
      const auto& r = outcomes[i].reports[k];
      auto& agg = result.reports[k];
      if (r.status == LemmaStatus::DomainError) continue;
      ++agg.instances_checked;
      if (r.status == LemmaStatus::Violation && agg.status != LemmaStatus::Violation) {
        agg.status = LemmaStatus::Violation;
        agg.violation = r.violation;
        agg.violation->detail = "instance=" + std::to_string(i) + " " + agg.violation->detail;
      }
    }
  }
  return result;
}

}  // namespace rainbow
