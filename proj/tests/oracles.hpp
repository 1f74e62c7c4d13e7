#pragma once

// Brute-force oracles. They deliberately share no code with the library's
// search routines: no adjacency-driven pruning, no color bitmasks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/pattern.hpp"

namespace rainbow::oracle {

/// Color of {a, b} by scanning the edge list, 0 when absent.
inline Color edge_color(const ColoredGraph& g, Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  for (const auto& e : g.edges()) {
    if (e.u == a && e.v == b) return e.color;
  }
  return 0;
}

/// Enumerates every ordered sequence of distinct vertices of the pattern's
/// size, keeps those that trace a rainbow copy, and divides out the ordered
/// representations per copy (2 for paths, 2ℓ for cycles).
inline std::uint64_t count_rainbow_naive(const ColoredGraph& g, const Pattern& p) {
  const std::size_t k = p.vertex_count();
  const std::size_t n = g.vertex_count();
  if (k > n) return 0;
  std::vector<Vertex> seq;
  std::vector<char> used(n, 0);
  std::uint64_t ordered = 0;
  std::function<void()> rec = [&] {
    if (seq.size() == k) {
      std::vector<Color> colors;
      const std::size_t steps = p.is_cycle() ? k : k - 1;
      for (std::size_t i = 0; i < steps; ++i) {
        Color c = edge_color(g, seq[i], seq[(i + 1) % k]);
        if (c == 0) return;
        colors.push_back(c);
      }
      std::sort(colors.begin(), colors.end());
      if (std::adjacent_find(colors.begin(), colors.end()) == colors.end()) ++ordered;
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      seq.push_back(v);
      rec();
      seq.pop_back();
      used[v] = 0;
    }
  };
  rec();
  return ordered / (p.is_cycle() ? 2 * static_cast<std::uint64_t>(p.length()) : 2);
}

inline bool has_rainbow_naive(const ColoredGraph& g, const Pattern& p) {
  return count_rainbow_naive(g, p) > 0;
}

inline bool is_proper_naive(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                            const std::vector<Color>& colors) {
  (void)n;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (colors[i] != colors[j]) continue;
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) return false;
    }
  }
  return true;
}

/// Calls visit(colors) for every set partition of m edges, encoded as a
/// restricted growth string with colors 1..k. This enumerates every coloring
/// up to a renaming of the colors; nothing else is pruned.
inline bool for_each_color_partition(std::size_t m,
                                     const std::function<bool(const std::vector<Color>&)>& visit) {
  std::vector<Color> colors(m, 0);
  std::function<bool(std::size_t, Color)> rec = [&](std::size_t i, Color max_used) {
    if (i == m) return visit(colors);
    for (Color c = 1; c <= max_used + 1; ++c) {
      colors[i] = c;
      if (rec(i + 1, std::max(max_used, c))) return true;
    }
    return false;
  };
  return rec(0, 0);
}

/// Whether the uncolored graph has some proper rainbow-p-free coloring.
inline bool admits_naive(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                         const Pattern& p) {
  return for_each_color_partition(edges.size(), [&](const std::vector<Color>& colors) {
    if (!is_proper_naive(n, edges, colors)) return false;
    std::vector<Edge> colored;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      colored.push_back({edges[i].first, edges[i].second, colors[i]});
    }
    return !has_rainbow_naive(ColoredGraph(n, std::move(colored)), p);
  });
}

/// ex*(n, p) over all 2^{n(n-1)/2} labeled graphs.
inline std::size_t ex_star_naive(std::size_t n, const Pattern& p) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    }
    if (edges.size() <= best) continue;
    if (admits_naive(n, edges, p)) best = edges.size();
  }
  return best;
}

}  // namespace rainbow::oracle
