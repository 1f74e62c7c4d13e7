#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rainbow {

/// Thrown when an argument violates an operation's documented precondition
/// (bad anchor, ℓ out of range, malformed edge list, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by the lemma checks when the instance lies outside the hypotheses
/// under which the statement is claimed.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A malformed rtg1 stream. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The exhaustive search declined to run (size guard).
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller-supplied parameters contradict a known bound.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rainbow
