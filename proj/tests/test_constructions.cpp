#include <bit>

#include "doctest.h"
#include "fixtures.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph_ops.hpp"
#include "rainbow/rainbow_search.hpp"

using namespace rainbow;

TEST_SUITE("constructions") {

TEST_CASE("folded cube sizes") {
  const auto d4 = build_folded_cube(3);
  CHECK(d4.vertex_count() == 4);
  CHECK(d4.edge_count() == 6);
  CHECK(d4.colors().size() == 3);
  CHECK(build_folded_cube(4).edge_count() == 16);
  CHECK(build_folded_cube(4).colors().size() == 4);
  CHECK(build_folded_cube(5).vertex_count() == 16);
  CHECK(build_folded_cube(5).edge_count() == 40);
  CHECK(build_folded_cube(5).colors().size() == 5);
  CHECK_THROWS_AS(build_folded_cube(2), PreconditionError);
  CHECK_THROWS_AS(build_folded_cube(kMaxFoldedCubeLength + 1), PreconditionError);
}

TEST_CASE("folded cube structure for l = 3..9") {
  for (int l = 3; l <= 9; ++l) {
    CAPTURE(l);
    const FoldedCubeSpec spec{l};
    const auto g = build_folded_cube(l);
    CHECK(is_proper(g));
    CHECK(g.edge_count() == spec.edge_count());
    CHECK(g.min_degree() == static_cast<std::size_t>(l));
    CHECK(g.max_degree() == static_cast<std::size_t>(l));
    for (const auto& e : g.edges()) {
      const auto diff = e.u ^ e.v;
      if (e.color == spec.diagonal_color()) {
        CHECK(e.v == spec.antipode(e.u));
      } else {
        REQUIRE(std::has_single_bit(diff));
        CHECK(e.color == spec.cube_color(std::countr_zero(diff)));
      }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      CHECK(g.color_between(v, spec.antipode(v)) == spec.diagonal_color());
    }
  }
}

TEST_CASE("folded cube is rainbow-path free for l = 3..6") {
  for (int l = 3; l <= 6; ++l) {
    CAPTURE(l);
    const auto g = build_folded_cube(l);
    CHECK(is_rainbow_free(g, Pattern::path(l)));
    CHECK_FALSE(is_rainbow_free(g, Pattern::path(l - 1)));
  }
}

TEST_CASE("rainbow cycle census") {
  const std::uint64_t expected[] = {4, 24, 192};
  for (int l = 3; l <= 5; ++l) {
    CHECK(count_rainbow(build_folded_cube(l), Pattern::cycle(l)) == expected[l - 3]);
  }
}

TEST_CASE("lower bound construction") {
  const auto g32 = build_lower_bound(32, 5);
  CHECK(g32.vertex_count() == 32);
  CHECK(g32.edge_count() == 80);
  CHECK(is_rainbow_free(g32, Pattern::path(5)));
  CHECK(build_lower_bound(16, 5) == build_folded_cube(5));
  const auto g3 = build_lower_bound(3, 5);
  CHECK(g3.vertex_count() == 3);
  CHECK(g3.edge_count() == 0);
  const auto g21 = build_lower_bound(21, 4);
  CHECK(g21.vertex_count() == 21);
  CHECK(g21.edge_count() == 32);
  CHECK(is_proper(g21));
  CHECK(is_rainbow_free(g21, Pattern::path(4)));
  CHECK_THROWS_AS(build_lower_bound(8, 2), PreconditionError);
}

TEST_CASE("theoretical bounds") {
  auto b = theoretical_bounds(16, 5);
  CHECK(b.lower == Rational(40));
  CHECK(b.upper == Rational(40));
  b = theoretical_bounds(8, 4);
  CHECK(b.lower == Rational(16));
  CHECK(b.upper == Rational(16));
  b = theoretical_bounds(14, 6);
  CHECK(b.lower == Rational(0));
  CHECK(b.upper == Rational(118));
  b = theoretical_bounds(5, 3);
  CHECK(b.lower == Rational(6));
  CHECK(b.upper == Rational(15, 2));
  CHECK_THROWS_AS(theoretical_bounds(10, 2), PreconditionError);
  for (int l = 3; l <= 10; ++l) {
    for (std::int64_t n = 0; n <= 600; n += 7) {
      const auto bb = theoretical_bounds(n, l);
      CHECK(bb.lower <= bb.upper);
      if (l <= 9) {
        CHECK(bb.lower == Rational(static_cast<std::int64_t>(
                              build_lower_bound(static_cast<std::size_t>(n), l).edge_count())));
      }
    }
  }
}

}
