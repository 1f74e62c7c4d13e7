#include "rainbow/rtg1.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_count(std::string_view token, std::size_t line_no, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, std::string("expected non-negative integer for ") + what +
                                  ", got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ColoredGraph read_rtg1(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 3 || tokens[0] != "rtg1") {
        throw ParseError(line_no, "expected header 'rtg1 <n> <m>'");
      }
      n = parse_count(tokens[1], line_no, "n");
      m = parse_count(tokens[2], line_no, "m");
      if (n > (std::uint64_t{1} << 31)) throw ParseError(line_no, "vertex count too large");
      if (m > n * (n - (n > 0 ? 1 : 0)) / 2) {
        throw ParseError(line_no, "m exceeds the number of vertex pairs");
      }
      have_header = true;
      continue;
    }

    if (edges.size() == m) throw ParseError(line_no, "more than m=" + std::to_string(m) + " edges");
    if (tokens.size() != 3) throw ParseError(line_no, "expected '<u> <v> <c>'");
    auto u = parse_count(tokens[0], line_no, "u");
    auto v = parse_count(tokens[1], line_no, "v");
    auto c = parse_count(tokens[2], line_no, "c");
    if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
    if (u > v) throw ParseError(line_no, "endpoints must satisfy u < v");
    if (v >= n) {
      throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(n));
    }
    if (c < 1 || c > 0xffffffffULL) throw ParseError(line_no, "color must be a positive 32-bit id");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Color>(c)});
    edge_lines.push_back(line_no);
  }

  if (!have_header) throw ParseError(line_no + 1, "missing 'rtg1' header");
  if (edges.size() != m) {
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }

  // Duplicate detection reports the later of the two lines.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (edges[a].u != edges[b].u) return edges[a].u < edges[b].u;
    if (edges[a].v != edges[b].v) return edges[a].v < edges[b].v;
    return a < b;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto& a = edges[order[i - 1]];
    const auto& b = edges[order[i]];
    if (a.u == b.u && a.v == b.v) {
      throw ParseError(edge_lines[order[i]], "duplicate edge {" + std::to_string(b.u) + "," +
                                                 std::to_string(b.v) + "}");
    }
  }
  return ColoredGraph(static_cast<std::size_t>(n), std::move(edges));
}

ColoredGraph read_rtg1_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return read_rtg1(in);
}

void write_rtg1(std::ostream& out, const ColoredGraph& g) {
  out << "rtg1 " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.color << '\n';
}

std::string to_rtg1(const ColoredGraph& g) {
  std::ostringstream out;
  write_rtg1(out, g);
  return out.str();
}

}  // namespace rainbow
