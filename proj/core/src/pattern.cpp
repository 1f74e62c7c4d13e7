#include "rainbow/pattern.hpp"

#include <charconv>

#include "rainbow/errors.hpp"

namespace rainbow {

// Anything longer is far beyond what the exhaustive searches can touch.
constexpr int kMaxPatternLength = 64;

Pattern Pattern::path(int length) {
  if (length < 1 || length > kMaxPatternLength) {
    throw PreconditionError("path length must be in [1, 64], got " + std::to_string(length));
  }
  return Pattern(PatternKind::Path, length);
}

Pattern Pattern::cycle(int length) {
  if (length < 3 || length > kMaxPatternLength) {
    throw PreconditionError("cycle length must be in [3, 64], got " + std::to_string(length));
  }
  return Pattern(PatternKind::Cycle, length);
}

Pattern Pattern::parse(std::string_view text) {
  if (text.size() < 2) throw PreconditionError("bad pattern '" + std::string(text) + "'");
  int length = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), length);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw PreconditionError("bad pattern '" + std::string(text) + "', expected P<l> or C<l>");
  }
  switch (text.front()) {
    case 'P':
    case 'p':
      return path(length);
    case 'C':
    case 'c':
      return cycle(length);
    default:
      throw PreconditionError("bad pattern '" + std::string(text) + "', expected P<l> or C<l>");
  }
}

std::string Pattern::to_string() const {
  return (is_path() ? "P" : "C") + std::to_string(length_);
}

}  // namespace rainbow
