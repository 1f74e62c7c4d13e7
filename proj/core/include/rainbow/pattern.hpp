#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace rainbow {

enum class PatternKind { Path, Cycle };

/// Forbidden/target subgraph: a path or cycle with `length` edges.
/// Path(ℓ) needs ℓ >= 1 and has ℓ+1 vertices; Cycle(ℓ) needs ℓ >= 3 and has
/// ℓ vertices.
class Pattern {
 public:
  static Pattern path(int length);
  static Pattern cycle(int length);
  /// "P5", "C4" (case-insensitive prefix).
  static Pattern parse(std::string_view text);

  PatternKind kind() const noexcept { return kind_; }
  int length() const noexcept { return length_; }
  bool is_path() const noexcept { return kind_ == PatternKind::Path; }
  bool is_cycle() const noexcept { return kind_ == PatternKind::Cycle; }
  std::size_t vertex_count() const noexcept {
    return static_cast<std::size_t>(is_path() ? length_ + 1 : length_);
  }

  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Pattern(PatternKind kind, int length) : kind_(kind), length_(length) {}

  PatternKind kind_;
  int length_;
};

}  // namespace rainbow
