#pragma once

#include <cstdint>

#include "rainbow/colored_graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

/// Parameters of the folded cube D*_{2^{ℓ-1}}: the hypercube Q_{ℓ-1} on the
/// integers 0..2^{ℓ-1}-1 plus every antipodal diagonal x -- ~x.
///
/// A cube edge between ids differing in bit i (least significant = 0) has
/// color i+1; every diagonal has color ℓ.
struct FoldedCubeSpec {
  int path_length = 3;  // ℓ

  int dimension() const noexcept { return path_length - 1; }
  std::size_t vertex_count() const noexcept { return std::size_t{1} << dimension(); }
  std::size_t edge_count() const noexcept {
    return static_cast<std::size_t>(path_length) * (vertex_count() / 2);
  }
  Vertex antipode(Vertex x) const noexcept {
    return x ^ static_cast<Vertex>(vertex_count() - 1);
  }
  Color cube_color(int bit) const noexcept { return static_cast<Color>(bit + 1); }
  Color diagonal_color() const noexcept { return static_cast<Color>(path_length); }
};

/// Largest ℓ build_folded_cube() accepts (2^23 vertices).
inline constexpr int kMaxFoldedCubeLength = 24;

/// Requires 3 <= ℓ <= kMaxFoldedCubeLength; at ℓ = 2 the diagonal would
/// duplicate the single cube edge.
ColoredGraph build_folded_cube(int path_length);

/// floor(n / 2^{ℓ-1}) disjoint copies of D*_{2^{ℓ-1}} sharing colors 1..ℓ,
/// followed by n mod 2^{ℓ-1} isolated vertices.
ColoredGraph build_lower_bound(std::size_t n, int path_length);

struct Bounds {
  Rational lower;
  Rational upper;
};

/// lower: edge count of build_lower_bound(n, ℓ).
/// upper: (9ℓ+5)n/7, or ℓn/2 for ℓ in {3, 4, 5}.
Bounds theoretical_bounds(std::int64_t n, int path_length);

}  // namespace rainbow
