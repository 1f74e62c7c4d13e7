#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "rainbow/colored_graph.hpp"
#include "rainbow/pattern.hpp"

namespace rainbow {

/// Default refusal threshold for ex_star_exact (override with `force`).
inline constexpr std::size_t kDefaultVertexGuard = 8;

struct ColoringOptions {
  /// Each newly introduced color must be exactly one more than the largest
  /// color used so far. Loses no colorings up to color permutation.
  bool break_color_symmetry = true;
  /// Palette size; 0 means "number of edges", which never restricts anything.
  std::size_t max_colors = 0;
};

struct SearchCounters {
  std::uint64_t nodes = 0;  // color assignments tried
};

/// Complete backtracking search for a proper coloring of (n, edges) without a
/// rainbow copy of p. Partial assignments are cut as soon as the colored
/// edges contain a rainbow copy.
std::optional<ColoredGraph> admits_rainbow_free_coloring(
    std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges, const Pattern& p,
    const ColoringOptions& options = {}, SearchCounters* counters = nullptr);

struct ExtremalOptions {
  std::optional<std::size_t> edge_cap;
  bool force = false;  // lift the kDefaultVertexGuard refusal
  unsigned jobs = 1;
};

struct ExtremalStats {
  std::size_t graphs_enumerated = 0;    // isomorphism classes generated
  std::size_t coloring_searches = 0;    // graphs handed to the coloring search
  std::uint64_t search_nodes = 0;
  double wall_seconds = 0.0;
};

struct ExtremalResult {
  std::size_t n = 0;
  Pattern pattern = Pattern::path(1);
  std::size_t value = 0;
  ColoredGraph witness;
  ExtremalStats stats;
  /// The start cap was feasible and was not probed past (explicit caps only):
  /// `value` is then max over graphs with at most edge_cap edges.
  bool capped = false;
};

/// Exact ex*(n, p): the largest edge count of an n-vertex graph admitting a
/// proper, rainbow-p-free coloring. Walks isomorphism classes of graphs
/// (canonical augmentation) from the cap downwards and stops at the first
/// feasible edge count. The witness is the feasible graph of least canonical
/// code at that count.
///
/// Throws RefusalError when n exceeds the guard (n > 8 for ℓ >= 3 patterns
/// without `force`; n > 11 always) and InconsistencyError when an explicit cap
/// lies below the construction lower bound.
ExtremalResult ex_star_exact(std::size_t n, const Pattern& p, const ExtremalOptions& options = {});

struct MaximalityResult {
  bool maximal = false;
  std::optional<Edge> counterexample;  // an addable edge with its color
};

/// Whether every non-edge, under every color from used ∪ {max+1} that keeps
/// the coloring proper, creates a rainbow copy of p. Requires g proper and
/// rainbow-p-free (DomainError otherwise).
MaximalityResult certify_maximal(const ColoredGraph& g, const Pattern& p);

}  // namespace rainbow
