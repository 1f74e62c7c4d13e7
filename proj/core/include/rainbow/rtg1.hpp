#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "rainbow/colored_graph.hpp"

namespace rainbow {

// rtg1 text format:
//
//   rtg1 <n> <m>
//   <u> <v> <c>      (m lines, 0 <= u < v < n, c >= 1)
//
// Lines whose first non-blank character is '#' are comments. Blank lines are
// ignored. Violations raise ParseError carrying the 1-based line number.

ColoredGraph read_rtg1(std::istream& in);
ColoredGraph read_rtg1_file(const std::filesystem::path& path);

/// Canonical form: header, then edges sorted by (u, v), newline-terminated.
void write_rtg1(std::ostream& out, const ColoredGraph& g);
std::string to_rtg1(const ColoredGraph& g);

}  // namespace rainbow
