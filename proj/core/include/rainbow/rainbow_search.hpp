#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/pattern.hpp"

namespace rainbow {

/// An explicit rainbow copy. `colors[i]` is the color of the edge
/// vertices[i] -- vertices[i+1]; for cycles the last color closes back to
/// vertices[0], so both vectors have ℓ entries.
struct RainbowWitness {
  Pattern pattern = Pattern::path(1);
  std::vector<Vertex> vertices;
  std::vector<Color> colors;

  friend bool operator==(const RainbowWitness&, const RainbowWitness&) = default;
};

enum class AnchorRole {
  Endpoint,  // paths only: the anchor is vertices.front()
  Member,
};

struct Anchor {
  Vertex vertex = 0;
  AnchorRole role = AnchorRole::Member;
};

/// First rainbow copy in lexicographic vertex order (neighbors explored in
/// ascending order). With an anchor, the witness contains it in the requested
/// role; endpoint and cycle-member witnesses start at the anchor.
///
/// Throws PreconditionError for an out-of-range anchor or an endpoint anchor
/// on a cycle pattern.
std::optional<RainbowWitness> find_rainbow(const ColoredGraph& g, const Pattern& p,
                                           std::optional<Anchor> anchor = std::nullopt);

bool is_rainbow_free(const ColoredGraph& g, const Pattern& p);

/// Number of rainbow copies counted as unlabeled subgraphs. Root branches are
/// split across `jobs` threads; the total does not depend on `jobs`.
std::uint64_t count_rainbow(const ColoredGraph& g, const Pattern& p, unsigned jobs = 1);

/// Calls `visit` once per rainbow copy, in canonical orientation (paths with
/// front < back; cycles starting at their least vertex with
/// vertices[1] < vertices.back()). Stops early when `visit` returns false.
void for_each_rainbow(const ColoredGraph& g, const Pattern& p,
                      const std::function<bool(const RainbowWitness&)>& visit);

/// Vertices lying on at least one rainbow C5, ascending.
std::vector<Vertex> rainbow_c5_membership(const ColoredGraph& g);

/// Re-checks a witness against the host graph without using the search code.
bool validate_witness(const ColoredGraph& g, const RainbowWitness& w);

/// "witness path 5: 0 -1- 1 -2- 2 ..."; cycles repeat the first vertex at the end.
std::string format_witness(const RainbowWitness& w);

}  // namespace rainbow
