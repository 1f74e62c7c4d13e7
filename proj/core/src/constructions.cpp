#include "rainbow/constructions.hpp"

#include <string>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/graph_ops.hpp"

namespace rainbow {

ColoredGraph build_folded_cube(int path_length) {
  if (path_length < 3 || path_length > kMaxFoldedCubeLength) {
    throw PreconditionError("folded cube needs 3 <= l <= " +
                            std::to_string(kMaxFoldedCubeLength) + ", got " +
                            std::to_string(path_length));
  }
  const FoldedCubeSpec spec{path_length};
  const auto n = static_cast<Vertex>(spec.vertex_count());
  std::vector<Edge> edges;
  edges.reserve(spec.edge_count());
  for (Vertex x = 0; x < n; ++x) {
    for (int bit = 0; bit < spec.dimension(); ++bit) {
      Vertex y = x ^ (Vertex{1} << bit);
      if (x < y) edges.push_back({x, y, spec.cube_color(bit)});
    }
    Vertex y = spec.antipode(x);
    if (x < y) edges.push_back({x, y, spec.diagonal_color()});
  }
  return ColoredGraph(n, std::move(edges));
}

ColoredGraph build_lower_bound(std::size_t n, int path_length) {
  if (path_length < 3 || path_length > kMaxFoldedCubeLength) {
    throw PreconditionError("lower-bound construction needs 3 <= l <= " +
                            std::to_string(kMaxFoldedCubeLength));
  }
  const FoldedCubeSpec spec{path_length};
  const std::size_t block = spec.vertex_count();
  const std::size_t copies = n / block;
  std::vector<ColoredGraph> parts;
  if (copies > 0) {
    const auto cube = build_folded_cube(path_length);
    parts.assign(copies, cube);
  }
  parts.emplace_back(n % block);
  return disjoint_union(parts, /*share_colors=*/true);
}

Bounds theoretical_bounds(std::int64_t n, int path_length) {
  if (path_length < 3) {
    throw PreconditionError("bounds need l >= 3, got " + std::to_string(path_length));
  }
  if (n < 0) throw PreconditionError("n must be non-negative");
  const std::int64_t l = path_length;
  std::int64_t copies = 0;
  if (l - 1 < 62) copies = n / (std::int64_t{1} << (l - 1));
  Bounds b;
  // (ℓ/2) * 2^{ℓ-1} * copies = ℓ * 2^{ℓ-2} * copies; copies > 0 implies ℓ < 62.
  b.lower = copies == 0 ? Rational(0) : Rational(l * (std::int64_t{1} << (l - 2)) * copies);
  if (path_length <= 5) {
    b.upper = Rational(l * n, 2);
  } else {
    b.upper = Rational((9 * l + 5) * n, 7);
  }
  return b;
}

}  // namespace rainbow
