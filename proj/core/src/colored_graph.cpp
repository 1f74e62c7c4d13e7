#include "rainbow/colored_graph.hpp"

#include <algorithm>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

ColoredGraph::ColoredGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

ColoredGraph::ColoredGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw PreconditionError("loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= vertex_count) {
      throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} out of range for n=" + std::to_string(vertex_count));
    }
    if (e.color == 0) {
      throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} has color 0; colors start at 1");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
      throw PreconditionError("repeated edge {" + std::to_string(edges_[i].u) + "," +
                              std::to_string(edges_[i].v) + "}");
    }
  }
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.color});
    adjacency_[e.v].push_back({e.u, e.color});
    colors_.push_back(e.color);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
  }
  std::sort(colors_.begin(), colors_.end());
  colors_.erase(std::unique(colors_.begin(), colors_.end()), colors_.end());
}

std::optional<Color> ColoredGraph::color_between(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return std::nullopt;
  const auto& list = adjacency_[a];
  auto it = std::lower_bound(list.begin(), list.end(), b,
                             [](const Incidence& inc, Vertex x) { return inc.neighbor < x; });
  if (it == list.end() || it->neighbor != b) return std::nullopt;
  return it->color;
}

std::size_t ColoredGraph::min_degree() const noexcept {
  std::size_t best = 0;
  bool first = true;
  for (const auto& list : adjacency_) {
    if (first || list.size() < best) best = list.size();
    first = false;
  }
  return best;
}

std::size_t ColoredGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

ColoredGraph ColoredGraph::with_edge(Edge e) const {
  auto edges = edges_;
  edges.push_back(e);
  return ColoredGraph(vertex_count(), std::move(edges));
}

}  // namespace rainbow
