#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "rainbow/colored_graph.hpp"

namespace rainbow {

/// Upper triangle of an 11-vertex adjacency matrix is 55 bits.
inline constexpr std::size_t kMaxSmallGraphVertices = 11;

/// Uncolored simple graph with adjacency bit rows, for exhaustive enumeration.
class SmallGraph {
 public:
  explicit SmallGraph(std::size_t n = 0);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_; }
  bool has_edge(Vertex a, Vertex b) const noexcept { return (rows_[a] >> b) & 1U; }
  std::uint32_t row(Vertex v) const noexcept { return rows_[v]; }
  std::size_t degree(Vertex v) const noexcept;

  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);

  /// (u, v) with u < v, ascending.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Bit k (most significant first) of the upper triangle in row-major order.
  std::uint64_t code() const noexcept;

  /// Vertex v of *this becomes vertex labeling[v] of the result.
  SmallGraph relabeled(const std::vector<Vertex>& labeling) const;

  friend bool operator==(const SmallGraph& a, const SmallGraph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint32_t> rows_;
};

/// Canonical labeling by individualization-refinement over equitable
/// partitions. The full search tree is explored, so `automorphisms` is the
/// whole automorphism group (as vertex maps), not just generators.
struct CanonicalForm {
  std::uint64_t code = 0;            // code() of the canonically relabeled graph
  std::vector<Vertex> labeling;      // vertex -> canonical position
  std::vector<std::vector<Vertex>> automorphisms;
};

CanonicalForm canonical_form(const SmallGraph& g);

inline SmallGraph canonical_graph(const SmallGraph& g) {
  return g.relabeled(canonical_form(g).labeling);
}

/// Isomorph-free generation by canonical edge augmentation: level(m) holds
/// one canonically labeled representative of every m-edge graph on n
/// vertices, sorted by code.
class GraphEnumerator {
 public:
  explicit GraphEnumerator(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t max_edges() const noexcept { return n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2; }

  /// Generates intermediate levels on demand.
  const std::vector<SmallGraph>& level(std::size_t m);

  /// Total graphs generated so far across all levels.
  std::size_t generated() const noexcept;

 private:
  std::vector<SmallGraph> augment(const std::vector<SmallGraph>& parents) const;

  std::size_t n_;
  std::vector<std::vector<SmallGraph>> levels_;
};

}  // namespace rainbow
