#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/rtg1.hpp"

using namespace rainbow;

namespace {

std::size_t error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_rtg1(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("rtg1") {

TEST_CASE("reads comments and edges") {
  std::istringstream in("# a triangle\nrtg1 3 3\n0 1 1\n# middle\n1 2 2\n0 2 3\n");
  const auto g = read_rtg1(in);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.color_between(2, 0) == 3u);
}

TEST_CASE("writes canonical sorted form") {
  const auto g = ColoredGraph(4, {{2, 3, 1}, {1, 0, 2}});
  CHECK(to_rtg1(g) == "rtg1 4 2\n0 1 2\n2 3 1\n");
  CHECK(to_rtg1(ColoredGraph(0)) == "rtg1 0 0\n");
}

TEST_CASE("rejects malformed input with the offending line") {
  CHECK(error_line("rtg1 3 2\n0 1 1\n0 1 2\n") == 3);    // duplicate
  CHECK(error_line("rtg1 3 1\n1 1 1\n") == 2);           // loop
  CHECK(error_line("rtg1 3 1\n0 3 1\n") == 2);           // out of range
  CHECK(error_line("rtg1 3 1\n2 1 1\n") == 2);           // u > v
  CHECK(error_line("rtg1 3 1\n0 1 0\n") == 2);           // color 0
  CHECK(error_line("rtg1 3 1\n0 1 -4\n") == 2);          // negative
  CHECK(error_line("rtg1 3 1\n0 1\n") == 2);             // short line
  CHECK(error_line("rtg1 3 1\n0 1 1\n1 2 1\n") == 3);    // too many edges
  CHECK(error_line("rtg1 3 2\n0 1 1\n") == 3);           // too few edges
  CHECK(error_line("graph 3 1\n") == 1);                 // header
  CHECK(error_line("# only a comment\n") == 2);          // missing header
  CHECK(error_line("rtg1 3 4\n") == 1);                  // m > n(n-1)/2
}

TEST_CASE("property: write then read is the identity and byte-stable") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_colored(rng() % 15, 0.4, 20, rng);
    const auto text = to_rtg1(g);
    std::istringstream in(text);
    const auto back = read_rtg1(in);
    CHECK(back == g);
    CHECK(to_rtg1(back) == text);
  }
}

}
