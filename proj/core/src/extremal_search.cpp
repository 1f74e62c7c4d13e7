#include "rainbow/extremal_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "rainbow/canonical.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph_ops.hpp"
#include "rainbow/rainbow_search.hpp"

namespace rainbow {
namespace {

/// Breadth-first from the highest-degree vertex so that consecutive edges
/// share endpoints and rainbow copies close early.
std::vector<std::pair<Vertex, Vertex>> order_edges(std::size_t n,
                                                   std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<std::size_t> rank(n, n);
  std::size_t next_rank = 0;
  while (next_rank < n) {
    Vertex root = 0;
    std::size_t best = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (rank[v] == n && (!found || adj[v].size() > best)) {
        root = v;
        best = adj[v].size();
        found = true;
      }
    }
    std::vector<Vertex> queue{root};
    rank[root] = next_rank++;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Vertex w : adj[queue[i]]) {
        if (rank[w] == n) {
          rank[w] = next_rank++;
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<std::pair<Vertex, Vertex>> ordered(edges.begin(), edges.end());
  std::sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
    auto key = [&](const std::pair<Vertex, Vertex>& e) {
      return std::pair{std::max(rank[e.first], rank[e.second]), std::min(rank[e.first], rank[e.second])};
    };
    return key(x) < key(y);
  });
  return ordered;
}

class ColoringSearch {
 public:
  ColoringSearch(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges, const Pattern& p,
                 const ColoringOptions& options)
      : n_(n),
        pattern_(p),
        options_(options),
        order_(order_edges(n, edges)),
        palette_(options.max_colors == 0 ? edges.size() : std::min(options.max_colors, edges.size())),
        adj_(n),
        on_path_(n, 0),
        colors_(order_.size(), 0) {
    for (auto [u, v] : edges) {
      if (u == v || u >= n || v >= n) throw PreconditionError("edge list is not a simple graph");
    }
    words_ = (palette_ + 64) / 64;
    at_vertex_.assign(n * words_, 0);
  }

  std::optional<ColoredGraph> run() {
    if (!assign(0)) return std::nullopt;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      edges.push_back({order_[i].first, order_[i].second, colors_[i]});
    }
    return ColoredGraph(n_, std::move(edges));
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool taken(Vertex v, Color c) const {
    return (at_vertex_[v * words_ + (c >> 6)] >> (c & 63)) & 1U;
  }
  void toggle(Vertex v, Color c) { at_vertex_[v * words_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63); }

  bool assign(std::size_t i) {
    if (i == order_.size()) return true;
    const auto [u, v] = order_[i];
    const Color limit = static_cast<Color>(
        options_.break_color_symmetry ? std::min<std::size_t>(max_used_ + 1, palette_) : palette_);
    for (Color c = 1; c <= limit; ++c) {
      if (taken(u, c) || taken(v, c)) continue;
      ++nodes_;
      const Color saved_max = max_used_;
      colors_[i] = c;
      max_used_ = std::max(max_used_, c);
      toggle(u, c);
      toggle(v, c);
      adj_[u].push_back({v, c});
      adj_[v].push_back({u, c});
      const bool ok = !closes_rainbow(u, v, c) && assign(i + 1);
      adj_[u].pop_back();
      adj_[v].pop_back();
      toggle(u, c);
      toggle(v, c);
      max_used_ = saved_max;
      if (ok) return true;
    }
    return false;
  }

  bool color_free(Color c) const {
    return std::find(used_.begin(), used_.end(), c) == used_.end();
  }

  /// Any rainbow copy among colored edges must use the new edge u -- v.
  bool closes_rainbow(Vertex u, Vertex v, Color c) {
    used_.assign(1, c);
    on_path_[u] = on_path_[v] = 1;
    bool hit = false;
    if (pattern_.is_cycle()) {
      hit = cycle_arm(v, u, pattern_.length() - 1);
    } else {
      hit = left_arm(u, v, 0);
    }
    on_path_[u] = on_path_[v] = 0;
    return hit;
  }

  // Path: extend from the u side by `len` edges, then try the v side with the rest.
  bool left_arm(Vertex tip, Vertex right_start, int len) {
    if (right_arm(right_start, pattern_.length() - 1 - len)) return true;
    if (len == pattern_.length() - 1) return false;
    for (const auto& inc : adj_[tip]) {
      if (on_path_[inc.neighbor] || !color_free(inc.color)) continue;
      on_path_[inc.neighbor] = 1;
      used_.push_back(inc.color);
      const bool hit = left_arm(inc.neighbor, right_start, len + 1);
      used_.pop_back();
      on_path_[inc.neighbor] = 0;
      if (hit) return true;
    }
    return false;
  }

  bool right_arm(Vertex tip, int remaining) {
    if (remaining == 0) return true;
    for (const auto& inc : adj_[tip]) {
      if (on_path_[inc.neighbor] || !color_free(inc.color)) continue;
      on_path_[inc.neighbor] = 1;
      used_.push_back(inc.color);
      const bool hit = right_arm(inc.neighbor, remaining - 1);
      used_.pop_back();
      on_path_[inc.neighbor] = 0;
      if (hit) return true;
    }
    return false;
  }

  // Cycle: walk `remaining` edges from tip and arrive exactly at `home`. The
  // new edge itself is never re-used because its color is already taken.
  bool cycle_arm(Vertex tip, Vertex home, int remaining) {
    for (const auto& inc : adj_[tip]) {
      if (!color_free(inc.color)) continue;
      if (inc.neighbor == home) {
        if (remaining == 1) return true;
        continue;
      }
      if (remaining == 1 || on_path_[inc.neighbor]) continue;
      on_path_[inc.neighbor] = 1;
      used_.push_back(inc.color);
      const bool hit = cycle_arm(inc.neighbor, home, remaining - 1);
      used_.pop_back();
      on_path_[inc.neighbor] = 0;
      if (hit) return true;
    }
    return false;
  }

  std::size_t n_;
  Pattern pattern_;
  ColoringOptions options_;
  std::vector<std::pair<Vertex, Vertex>> order_;
  std::size_t palette_;
  std::size_t words_ = 1;
  std::vector<std::uint64_t> at_vertex_;
  std::vector<std::vector<Incidence>> adj_;
  std::vector<char> on_path_;
  std::vector<Color> used_;
  std::vector<Color> colors_;
  Color max_used_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<ColoredGraph> admits_rainbow_free_coloring(
    std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges, const Pattern& p,
    const ColoringOptions& options, SearchCounters* counters) {
  ColoringSearch search(n, edges, p, options);
  auto result = search.run();
  if (counters) counters->nodes += search.nodes();
  return result;
}

namespace {

struct LevelHit {
  std::size_t index = 0;
  ColoredGraph coloring;
};

/// Least-index graph of the level admitting a rainbow-free coloring. Workers
/// skip indices above the best hit so far; the answer does not depend on jobs.
std::optional<LevelHit> first_feasible(const std::vector<SmallGraph>& level, const Pattern& p,
                                       unsigned jobs, ExtremalStats& stats) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{level.size()};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::size_t> searches{0};
  std::mutex hit_mutex;
  std::optional<LevelHit> hit;

  auto worker = [&] {
    for (std::size_t i = next++; i < level.size(); i = next++) {
      if (i > best.load()) break;
      const auto edges = level[i].edges();
      SearchCounters counters;
      auto coloring = admits_rainbow_free_coloring(level[i].vertex_count(), edges, p, {}, &counters);
      nodes += counters.nodes;
      ++searches;
      if (!coloring) continue;
      std::lock_guard lock(hit_mutex);
      if (!hit || i < hit->index) {
        hit = LevelHit{i, std::move(*coloring)};
        best = i;
      }
    }
  };

  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  stats.search_nodes += nodes;
  stats.coloring_searches += searches;
  return hit;
}

}  // namespace

ExtremalResult ex_star_exact(std::size_t n, const Pattern& p, const ExtremalOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (n < 1) throw PreconditionError("ex_star_exact needs n >= 1");
  if (n > kMaxSmallGraphVertices) {
    throw RefusalError("n=" + std::to_string(n) + " exceeds the enumeration limit of " +
                       std::to_string(kMaxSmallGraphVertices) + " vertices");
  }
  const bool trivial_pattern = p.is_path() && p.length() <= 2;
  if (n > kDefaultVertexGuard && !trivial_pattern && !options.force) {
    throw RefusalError("n=" + std::to_string(n) + " > " + std::to_string(kDefaultVertexGuard) +
                       " is exponential; pass force to run anyway");
  }

  const std::size_t all_pairs = n * (n - 1) / 2;
  std::size_t lower = 0;
  std::size_t cap = all_pairs;
  if (p.is_path() && p.length() >= 3) {
    const auto bounds = theoretical_bounds(static_cast<std::int64_t>(n), p.length());
    lower = static_cast<std::size_t>(boost::rational_cast<std::int64_t>(bounds.lower));
    const auto upper = bounds.upper.numerator() / bounds.upper.denominator();
    cap = std::min(cap, static_cast<std::size_t>(upper));
  }
  const bool explicit_cap = options.edge_cap.has_value();
  if (explicit_cap) {
    if (*options.edge_cap < lower) {
      throw InconsistencyError("edge cap " + std::to_string(*options.edge_cap) +
                               " is below the construction lower bound " + std::to_string(lower));
    }
    cap = std::min(*options.edge_cap, all_pairs);
  }

  ExtremalResult result;
  result.n = n;
  result.pattern = p;
  GraphEnumerator enumerator(n);

  std::optional<LevelHit> hit;
  std::size_t m = cap;
  while (true) {
    hit = first_feasible(enumerator.level(m), p, options.jobs, result.stats);
    if (hit || m == 0) break;
    --m;
  }
  // The edgeless graph is always feasible, so hit is set here.
  if (!explicit_cap && m == cap) {
    // The default cap is a bound taken on trust; climb until infeasible.
    while (m < all_pairs) {
      auto above = first_feasible(enumerator.level(m + 1), p, options.jobs, result.stats);
      if (!above) break;
      hit = std::move(above);
      ++m;
    }
  }
  result.capped = explicit_cap && m == cap && cap < all_pairs;
  result.value = m;
  result.witness = std::move(hit->coloring);
  result.stats.graphs_enumerated = enumerator.generated();
  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

MaximalityResult certify_maximal(const ColoredGraph& g, const Pattern& p) {
  if (!is_proper(g)) throw DomainError("coloring is not proper");
  if (auto w = find_rainbow(g, p)) {
    throw DomainError("graph already contains a rainbow " + p.to_string() + " (" +
                      format_witness(*w) + ")");
  }
  const Color fresh = g.max_color() + 1;
  std::vector<Color> choices(g.colors().begin(), g.colors().end());
  choices.push_back(fresh);

  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (g.has_edge(u, v)) continue;
      for (Color c : choices) {
        auto clashes = [&](Vertex x) {
          const auto nbrs = g.neighbors(x);
          return std::any_of(nbrs.begin(), nbrs.end(),
                             [c](const Incidence& inc) { return inc.color == c; });
        };
        if (clashes(u) || clashes(v)) continue;
        const auto extended = g.with_edge({u, v, c});
        // g is rainbow-free, so any copy in the extension uses u -- v.
        if (!find_rainbow(extended, p, Anchor{u, AnchorRole::Member})) {
          return MaximalityResult{false, Edge{u, v, c}};
        }
      }
    }
  }
  return MaximalityResult{true, std::nullopt};
}

}  // namespace rainbow
