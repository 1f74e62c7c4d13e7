#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/constructions.hpp"

namespace rainbow::testing {

/// K4 colored by its three perfect matchings.
inline ColoredGraph k4_three_colored() {
  return ColoredGraph(4, {{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {1, 3, 2}, {0, 3, 3}, {1, 2, 3}});
}

/// Path 0-1-...-k with the given edge colors.
inline ColoredGraph path_graph(const std::vector<Color>& colors) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < colors.size(); ++i) edges.push_back({i, i + 1, colors[i]});
  return ColoredGraph(colors.size() + 1, std::move(edges));
}

/// Cycle 0-1-...-(k-1)-0 with the given edge colors.
inline ColoredGraph cycle_graph(const std::vector<Color>& colors) {
  std::vector<Edge> edges;
  const auto k = static_cast<Vertex>(colors.size());
  for (Vertex i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k, colors[i]});
  return ColoredGraph(k, std::move(edges));
}

inline ColoredGraph folded_cube(int l) { return build_folded_cube(l); }

/// G(n, p) random graph with colors drawn uniformly from 1..palette (not
/// necessarily proper).
inline ColoredGraph random_colored(std::size_t n, double density, Color palette, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<Color> color(1, palette);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (keep(rng)) edges.push_back({u, v, color(rng)});
    }
  }
  return ColoredGraph(n, std::move(edges));
}

/// Random graph with a greedy proper coloring in random edge order.
inline ColoredGraph random_proper(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (keep(rng)) pairs.emplace_back(u, v);
    }
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<std::vector<Color>> at(n);
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) {
    Color c = 1;
    while (std::find(at[u].begin(), at[u].end(), c) != at[u].end() ||
           std::find(at[v].begin(), at[v].end(), c) != at[v].end()) {
      ++c;
    }
    at[u].push_back(c);
    at[v].push_back(c);
    edges.push_back({u, v, c});
  }
  return ColoredGraph(n, std::move(edges));
}

}  // namespace rainbow::testing
