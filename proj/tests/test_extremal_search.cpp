#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "rainbow/canonical.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/extremal_search.hpp"
#include "rainbow/graph_ops.hpp"
#include "rainbow/rainbow_search.hpp"

using namespace rainbow;
using namespace rainbow::testing;

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

Pairs k4_pairs() { return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}; }

void check_witness(const ExtremalResult& r) {
  CHECK(r.witness.vertex_count() == r.n);
  CHECK(r.witness.edge_count() == r.value);
  CHECK(is_proper(r.witness));
  CHECK(oracle::count_rainbow_naive(r.witness, r.pattern) == 0);
}

// ex*(n, P_l) for n = 1..5, l = 2..4, computed once by a standalone
// brute-force script over all labeled graphs and all proper colorings.
constexpr std::size_t kFrozen[5][3] = {{0, 0, 0}, {1, 1, 1}, {1, 3, 3}, {2, 6, 6}, {2, 6, 7}};

}  // namespace

TEST_SUITE("extremal-search") {

TEST_CASE("admits_rainbow_free_coloring examples") {
  const auto k4 = admits_rainbow_free_coloring(4, k4_pairs(), Pattern::path(3));
  REQUIRE(k4);
  CHECK(is_proper(*k4));
  CHECK(k4->colors().size() == 3);
  CHECK(is_rainbow_free(*k4, Pattern::path(3)));

  auto pendant = k4_pairs();
  pendant.emplace_back(3, 4);
  CHECK_FALSE(admits_rainbow_free_coloring(5, pendant, Pattern::path(3)));
  CHECK_FALSE(oracle::admits_naive(5, pendant, Pattern::path(3)));

  const Pairs single = {{0, 1}};
  const auto one = admits_rainbow_free_coloring(2, single, Pattern::path(2));
  REQUIRE(one);
  CHECK(one->edge_count() == 1);
  CHECK_FALSE(admits_rainbow_free_coloring(2, single, Pattern::path(1)));
}

TEST_CASE("exact values") {
  const auto r43 = ex_star_exact(4, Pattern::path(3));
  CHECK(r43.value == 6);
  check_witness(r43);
  CHECK(r43.witness.colors().size() == 3);
  CHECK(r43.witness.min_degree() == 3);

  const auto r32 = ex_star_exact(3, Pattern::path(2));
  CHECK(r32.value == 1);
  check_witness(r32);

  const auto r53 = ex_star_exact(5, Pattern::path(3));
  CHECK(r53.value == 6);
  check_witness(r53);
  CHECK_FALSE(r53.capped);
}

TEST_CASE("agreement with the frozen brute-force table") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int l = 2; l <= 4; ++l) {
      CAPTURE(n);
      CAPTURE(l);
      const auto r = ex_star_exact(n, Pattern::path(l));
      CHECK(r.value == kFrozen[n - 1][l - 2]);
      check_witness(r);
      if (l >= 3) {
        CHECK(r.value >= build_lower_bound(n, l).edge_count());
      }
    }
  }
}

TEST_CASE("agreement with the in-process naive oracle") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int l = 2; l <= 4; ++l) {
      CAPTURE(n);
      CAPTURE(l);
      CHECK(ex_star_exact(n, Pattern::path(l)).value == oracle::ex_star_naive(n, Pattern::path(l)));
    }
    if (n >= 3) CHECK(ex_star_exact(n, Pattern::cycle(3)).value == oracle::ex_star_naive(n, Pattern::cycle(3)));
  }
}

TEST_CASE("property: color symmetry breaking loses no feasible graph") {
  const std::vector<Pattern> patterns = {Pattern::path(2), Pattern::path(3), Pattern::path(4),
                                         Pattern::cycle(3), Pattern::cycle(4)};
  for (std::size_t n = 1; n <= 4; ++n) {
    GraphEnumerator e(n);
    for (std::size_t m = 0; m <= e.max_edges(); ++m) {
      for (const auto& g : e.level(m)) {
        const auto pairs = g.edges();
        for (const auto& p : patterns) {
          const bool broken = admits_rainbow_free_coloring(n, pairs, p).has_value();
          const bool free_order =
              admits_rainbow_free_coloring(n, pairs, p, ColoringOptions{false, 0}).has_value();
          CHECK(broken == free_order);
          CHECK(broken == oracle::admits_naive(n, pairs, p));
        }
      }
    }
  }
}

TEST_CASE("property: random labeled graphs agree with the oracle") {
  std::mt19937_64 rng(606);
  const std::vector<Pattern> patterns = {Pattern::path(3), Pattern::path(4), Pattern::cycle(4)};
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + rng() % 2;
    Pairs pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 3) pairs.emplace_back(u, v);
    for (const auto& p : patterns) {
      const auto w = admits_rainbow_free_coloring(n, pairs, p);
      CHECK(w.has_value() == oracle::admits_naive(n, pairs, p));
      if (w) {
        CHECK(w->edge_count() == pairs.size());
        CHECK(is_proper(*w));
        CHECK(oracle::count_rainbow_naive(*w, p) == 0);
      }
    }
  }
}

TEST_CASE("guards and caps") {
  CHECK_THROWS_AS(ex_star_exact(0, Pattern::path(3)), PreconditionError);
  CHECK_THROWS_AS(ex_star_exact(9, Pattern::path(3)), RefusalError);
  CHECK_THROWS_AS(ex_star_exact(12, Pattern::path(2), ExtremalOptions{std::nullopt, true, 1}),
                  RefusalError);
  // construction at n = 8, l = 4 has 16 edges
  CHECK_THROWS_AS(ex_star_exact(8, Pattern::path(4), ExtremalOptions{15, false, 1}), InconsistencyError);

  const auto capped = ex_star_exact(4, Pattern::path(2), ExtremalOptions{1, false, 1});
  CHECK(capped.value == 1);
  const auto loose = ex_star_exact(5, Pattern::path(3), ExtremalOptions{6, false, 1});
  CHECK(loose.value == 6);
  CHECK(loose.capped);
  const auto complete = ex_star_exact(4, Pattern::path(3), ExtremalOptions{6, false, 1});
  CHECK(complete.value == 6);
  CHECK_FALSE(complete.capped);
}

TEST_CASE("result does not depend on the job count") {
  for (const auto& p : {Pattern::path(3), Pattern::path(4), Pattern::cycle(4)}) {
    const auto a = ex_star_exact(6, p, ExtremalOptions{std::nullopt, false, 1});
    const auto b = ex_star_exact(6, p, ExtremalOptions{std::nullopt, false, 3});
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    check_witness(a);
  }
}

TEST_CASE("certify_maximal") {
  CHECK(certify_maximal(folded_cube(4), Pattern::path(4)).maximal);
  CHECK(certify_maximal(folded_cube(3), Pattern::path(3)).maximal);
  const auto open = certify_maximal(ColoredGraph(2), Pattern::path(2));
  CHECK_FALSE(open.maximal);
  REQUIRE(open.counterexample);
  CHECK(open.counterexample->u == 0);
  CHECK(open.counterexample->v == 1);
  CHECK_THROWS_AS(certify_maximal(path_graph({1, 2, 3}), Pattern::path(3)), DomainError);
  CHECK_THROWS_AS(certify_maximal(cycle_graph({1, 1, 2}), Pattern::path(3)), DomainError);

  // an extremal witness cannot take another edge
  const auto r = ex_star_exact(5, Pattern::path(3));
  CHECK(certify_maximal(r.witness, Pattern::path(3)).maximal);
}

}
