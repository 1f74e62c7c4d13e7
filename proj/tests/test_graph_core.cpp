#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph_ops.hpp"

using namespace rainbow;
using namespace rainbow::testing;

TEST_SUITE("graph-core") {

TEST_CASE("construction rejects loops, repeats, bad ids and color 0") {
  CHECK_THROWS_AS(ColoredGraph(3, {{1, 1, 1}}), PreconditionError);
  CHECK_THROWS_AS(ColoredGraph(3, {{0, 1, 1}, {1, 0, 2}}), PreconditionError);
  CHECK_THROWS_AS(ColoredGraph(3, {{0, 3, 1}}), PreconditionError);
  CHECK_THROWS_AS(ColoredGraph(3, {{0, 1, 0}}), PreconditionError);
}

TEST_CASE("adjacency agrees with the edge set") {
  const auto g = ColoredGraph(5, {{3, 1, 7}, {0, 4, 2}, {1, 2, 7}});
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edges()[0] == Edge{0, 4, 2});
  CHECK(g.edges()[1] == Edge{1, 2, 7});
  CHECK(g.edges()[2] == Edge{1, 3, 7});
  std::size_t incidences = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (const auto& inc : g.neighbors(v)) {
      ++incidences;
      CHECK(g.color_between(inc.neighbor, v) == inc.color);
    }
  }
  CHECK(incidences == 2 * g.edge_count());
  CHECK(g.colors().size() == 2);
  CHECK(g.max_color() == 7);
  CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("is_proper") {
  CHECK(is_proper(k4_three_colored()));
  CHECK_FALSE(is_proper(cycle_graph({1, 1, 2})));
  CHECK(is_proper(ColoredGraph(5)));
}

TEST_CASE("average degrees are exact rationals") {
  const auto k4 = k4_three_colored();
  CHECK(average_degree(k4) == Rational(3));
  CHECK(average_degree(folded_cube(5)) == Rational(5));
  CHECK(average_degree(path_graph({1, 2})) == Rational(4, 3));
  const auto summary = degree_summary(disjoint_union(std::vector{k4, path_graph({1})}, false));
  REQUIRE(summary.components.size() == 2);
  CHECK(summary.components[0].avg_degree == Rational(3));
  CHECK(summary.components[1].avg_degree == Rational(1));
  CHECK(summary.avg_degree == Rational(14, 6));
  CHECK(summary.min_degree == 1);
}

TEST_CASE("prune_min_degree examples") {
  CHECK(prune_min_degree(path_graph({1, 2, 3}), 3).empty());
  const auto d16 = folded_cube(5);
  CHECK(prune_min_degree(d16, 3) == d16);
  const auto k4 = k4_three_colored();
  auto edges = std::vector<Edge>(k4.edges().begin(), k4.edges().end());
  edges.push_back({3, 4, 4});
  CHECK(prune_min_degree(ColoredGraph(5, edges), 3) == k4);
  CHECK_THROWS_AS(prune_min_degree(d16, 0), PreconditionError);
}

TEST_CASE("drop_light_components examples") {
  CHECK(drop_light_components(k4_three_colored(), Rational(5)).empty());
  const auto d16 = folded_cube(5);
  CHECK(drop_light_components(d16, Rational(5)).empty());
  CHECK(drop_light_components(d16, Rational(9, 2)) == d16);
  CHECK_THROWS_AS(drop_light_components(d16, Rational(-1)), PreconditionError);
}

TEST_CASE("preprocess examples") {
  const auto d16 = folded_cube(5);
  CHECK(preprocess(d16).empty());
  CHECK(preprocess(disjoint_union(std::vector{d16, d16}, true)).empty());
  CHECK(preprocess(ColoredGraph()).empty());
  // K7 survives: δ = 6 and average degree 6 > 5
  std::vector<Edge> k7;
  Color c = 1;
  for (Vertex u = 0; u < 7; ++u)
    for (Vertex v = u + 1; v < 7; ++v) k7.push_back({u, v, c++});
  const auto with_tail = ColoredGraph(9, [&] {
    auto e = k7;
    e.push_back({6, 7, 100});
    e.push_back({7, 8, 101});
    return e;
  }());
  auto kept = preprocess_with_ids(with_tail);
  CHECK(kept.graph.vertex_count() == 7);
  CHECK(kept.original == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("disjoint_union examples") {
  const auto d16 = folded_cube(5);
  const auto two = disjoint_union(std::vector{d16, d16}, true);
  CHECK(two.vertex_count() == 32);
  CHECK(two.edge_count() == 80);
  CHECK(two.colors().size() == 5);

  const auto single = path_graph({3, 4});
  CHECK(disjoint_union(std::vector{single}, false) == single);

  const auto e = path_graph({1});
  const auto distinct = disjoint_union(std::vector{e, e}, false);
  CHECK(distinct.edge_count() == 2);
  CHECK(distinct.colors().size() == 2);
  CHECK_THROWS_AS(disjoint_union(std::vector<ColoredGraph>{}, true), PreconditionError);
}

TEST_CASE("property: pruning is idempotent and independent of deletion order") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto g = random_colored(n, 0.45, 6, rng);
    const std::size_t k = 1 + rng() % 4;
    const auto core = prune_min_degree_with_ids(g, k);
    CHECK(prune_min_degree(core.graph, k) == core.graph);

    // random schedule: repeatedly delete a random vertex of degree < k
    std::vector<Vertex> alive(n);
    for (Vertex v = 0; v < n; ++v) alive[v] = v;
    while (true) {
      auto sub = induced_subgraph(g, alive);
      std::vector<std::size_t> low;
      for (Vertex i = 0; i < sub.graph.vertex_count(); ++i) {
        if (sub.graph.degree(i) < k) low.push_back(i);
      }
      if (low.empty()) break;
      const auto victim = sub.original[low[rng() % low.size()]];
      alive.erase(std::find(alive.begin(), alive.end(), victim));
    }
    CHECK(alive == core.original);
    if (!core.graph.empty()) CHECK(core.graph.min_degree() >= k);
  }
}

TEST_CASE("property: pruning to the 3-core does not lower a high average degree") {
  std::mt19937_64 rng(7);
  int exercised = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = random_colored(4 + rng() % 9, 0.5, 9, rng);
    if (average_degree(g) <= 4) continue;
    ++exercised;
    CHECK(average_degree(prune_min_degree(g, 3)) >= average_degree(g));
  }
  CHECK(exercised > 50);
}

TEST_CASE("property: preprocess output is empty or δ >= 3 with heavy components") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto out = preprocess(random_colored(3 + rng() % 10, 0.7, 12, rng));
    if (out.empty()) continue;
    CHECK(out.min_degree() >= 3);
    for (const auto& c : degree_summary(out).components) CHECK(c.avg_degree > 5);
  }
}

TEST_CASE("property: union is proper iff every part is") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ColoredGraph> parts;
    bool all_proper = true;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 3); ++i) {
      parts.push_back(rng() % 2 ? random_proper(2 + rng() % 6, 0.6, rng)
                                : random_colored(2 + rng() % 6, 0.6, 3, rng));
      all_proper = all_proper && is_proper(parts.back());
    }
    CHECK(is_proper(disjoint_union(parts, true)) == all_proper);
    CHECK(is_proper(disjoint_union(parts, false)) == all_proper);
  }
}

TEST_CASE("rationals parse and print") {
  CHECK(parse_rational("9/2") == Rational(9, 2));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(to_string(Rational(10, 4)) == "5/2");
  CHECK_THROWS_AS(parse_rational("x"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
}

}
