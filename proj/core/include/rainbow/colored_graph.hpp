#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rainbow {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor = 0;
  Color color = 0;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with a positive integer color
/// on every edge. Immutable once built; edges are kept sorted by (u, v) with
/// u < v and every adjacency list is sorted by neighbor.
///
/// The coloring is not required to be proper; use is_proper() for that.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  explicit ColoredGraph(std::size_t vertex_count);

  /// Edges may be given in either orientation. Throws PreconditionError on a
  /// loop, a repeated pair, an endpoint >= vertex_count or color 0.
  ColoredGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return adjacency_.empty(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Incidence> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Vertex a, Vertex b) const { return color_between(a, b).has_value(); }
  std::optional<Color> color_between(Vertex a, Vertex b) const;

  /// Distinct colors in use, ascending.
  std::span<const Color> colors() const noexcept { return colors_; }
  /// Largest color in use, 0 for an edgeless graph.
  Color max_color() const noexcept { return colors_.empty() ? 0 : colors_.back(); }

  std::size_t min_degree() const noexcept;
  std::size_t max_degree() const noexcept;

  ColoredGraph with_edge(Edge e) const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<Color> colors_;
};

}  // namespace rainbow
