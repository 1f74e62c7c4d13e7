#pragma once

#include <span>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

struct ComponentSummary {
  std::vector<Vertex> vertices;  // ascending
  std::size_t edge_count = 0;
  Rational avg_degree;
};

struct DegreeSummary {
  std::size_t min_degree = 0;
  Rational avg_degree;  // 2|E| / n, or 0 when n = 0
  std::vector<ComponentSummary> components;
};

/// Result of deleting vertices: the survivors are renumbered 0..k-1 in their
/// original relative order and `original[i]` is the old id of new vertex i.
struct InducedSubgraph {
  ColoredGraph graph;
  std::vector<Vertex> original;
};

bool is_proper(const ColoredGraph& g);

Rational average_degree(const ColoredGraph& g);
/// Average degree over a vertex subset (0 for an empty subset).
Rational average_degree(const ColoredGraph& g, std::span<const Vertex> subset);

/// Connected components, each ascending, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& g);
DegreeSummary degree_summary(const ColoredGraph& g);

/// Breadth-first distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const ColoredGraph& g, Vertex source);

InducedSubgraph induced_subgraph(const ColoredGraph& g, std::span<const Vertex> keep);

/// k-core: iteratively deletes vertices of degree < k. Requires k >= 1.
InducedSubgraph prune_min_degree_with_ids(const ColoredGraph& g, std::size_t k);
ColoredGraph prune_min_degree(const ColoredGraph& g, std::size_t k);

/// Deletes every component whose average degree is <= threshold.
InducedSubgraph drop_light_components_with_ids(const ColoredGraph& g, const Rational& threshold);
ColoredGraph drop_light_components(const ColoredGraph& g, const Rational& threshold);

/// drop_light_components(prune_min_degree(g, 3), 5).
InducedSubgraph preprocess_with_ids(const ColoredGraph& g);
ColoredGraph preprocess(const ColoredGraph& g);

/// Places the inputs on consecutive vertex ranges. With share_colors=false
/// each copy's colors are shifted past the previous copies' maximum color.
ColoredGraph disjoint_union(std::span<const ColoredGraph> graphs, bool share_colors);

}  // namespace rainbow
