#include "rainbow/graph_ops.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

bool is_proper(const ColoredGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Color> seen;
    for (const auto& inc : g.neighbors(v)) seen.push_back(inc.color);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

Rational average_degree(const ColoredGraph& g) {
  if (g.vertex_count() == 0) return Rational(0);
  return Rational(static_cast<std::int64_t>(2 * g.edge_count()),
                  static_cast<std::int64_t>(g.vertex_count()));
}

Rational average_degree(const ColoredGraph& g, std::span<const Vertex> subset) {
  if (subset.empty()) return Rational(0);
  std::int64_t total = 0;
  for (Vertex v : subset) total += static_cast<std::int64_t>(g.degree(v));
  return Rational(total, static_cast<std::int64_t>(subset.size()));
}

std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (const auto& inc : g.neighbors(comp[i])) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          comp.push_back(inc.neighbor);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

DegreeSummary degree_summary(const ColoredGraph& g) {
  DegreeSummary summary;
  summary.min_degree = g.min_degree();
  summary.avg_degree = average_degree(g);
  for (auto& comp : connected_components(g)) {
    ComponentSummary c;
    std::size_t degree_sum = 0;
    for (Vertex v : comp) degree_sum += g.degree(v);
    c.edge_count = degree_sum / 2;
    c.avg_degree = Rational(static_cast<std::int64_t>(degree_sum),
                            static_cast<std::int64_t>(comp.size()));
    c.vertices = std::move(comp);
    summary.components.push_back(std::move(c));
  }
  return summary;
}

std::vector<int> bfs_distances(const ColoredGraph& g, Vertex source) {
  if (source >= g.vertex_count()) {
    throw PreconditionError("vertex " + std::to_string(source) + " out of range");
  }
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.neighbors(x)) {
      if (dist[inc.neighbor] < 0) {
        dist[inc.neighbor] = dist[x] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

InducedSubgraph induced_subgraph(const ColoredGraph& g, std::span<const Vertex> keep) {
  constexpr Vertex kGone = ~Vertex{0};
  std::vector<Vertex> relabel(g.vertex_count(), kGone);
  InducedSubgraph result;
  result.original.assign(keep.begin(), keep.end());
  std::sort(result.original.begin(), result.original.end());
  result.original.erase(std::unique(result.original.begin(), result.original.end()),
                        result.original.end());
  for (std::size_t i = 0; i < result.original.size(); ++i) {
    Vertex v = result.original[i];
    if (v >= g.vertex_count()) {
      throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    }
    relabel[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (relabel[e.u] != kGone && relabel[e.v] != kGone) {
      edges.push_back({relabel[e.u], relabel[e.v], e.color});
    }
  }
  result.graph = ColoredGraph(result.original.size(), std::move(edges));
  return result;
}

InducedSubgraph prune_min_degree_with_ids(const ColoredGraph& g, std::size_t k) {
  if (k < 1) throw PreconditionError("prune_min_degree requires k >= 1");
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < k) {
      removed[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.neighbors(v)) {
      Vertex u = inc.neighbor;
      if (removed[u]) continue;
      if (--degree[u] < k) {
        removed[u] = 1;
        stack.push_back(u);
      }
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

ColoredGraph prune_min_degree(const ColoredGraph& g, std::size_t k) {
  return prune_min_degree_with_ids(g, k).graph;
}

InducedSubgraph drop_light_components_with_ids(const ColoredGraph& g, const Rational& threshold) {
  if (threshold < 0) throw PreconditionError("threshold must be >= 0");
  std::vector<Vertex> keep;
  for (const auto& comp : degree_summary(g).components) {
    if (comp.avg_degree > threshold) {
      keep.insert(keep.end(), comp.vertices.begin(), comp.vertices.end());
    }
  }
  return induced_subgraph(g, keep);
}

ColoredGraph drop_light_components(const ColoredGraph& g, const Rational& threshold) {
  return drop_light_components_with_ids(g, threshold).graph;
}

InducedSubgraph preprocess_with_ids(const ColoredGraph& g) {
  auto pruned = prune_min_degree_with_ids(g, 3);
  auto dropped = drop_light_components_with_ids(pruned.graph, Rational(5));
  for (auto& v : dropped.original) v = pruned.original[v];
  return dropped;
}

ColoredGraph preprocess(const ColoredGraph& g) { return preprocess_with_ids(g).graph; }

ColoredGraph disjoint_union(std::span<const ColoredGraph> graphs, bool share_colors) {
  if (graphs.empty()) throw PreconditionError("disjoint_union needs at least one graph");
  std::vector<Edge> edges;
  Vertex vertex_offset = 0;
  Color color_offset = 0;
  for (const auto& g : graphs) {
    for (const auto& e : g.edges()) {
      edges.push_back({e.u + vertex_offset, e.v + vertex_offset, e.color + color_offset});
    }
    vertex_offset += static_cast<Vertex>(g.vertex_count());
    if (!share_colors) color_offset += g.max_color();
  }
  return ColoredGraph(vertex_offset, std::move(edges));
}

}  // namespace rainbow
