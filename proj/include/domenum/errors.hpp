#pragma once

#include <stdexcept>
#include <string>

namespace domenum {

// Malformed graph or formula text. `line` is 1-based, 0 when not tied to a line.
class FormatError : public std::runtime_error {
public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// The input contradicts the graph class an algorithm was promised
// (disconnected, not chordal, contains a long induced path, ...).
class ClassError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Exhaustive routines refuse inputs above their configured size.
class SizeLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The bounded induced-path search ran out of nodes.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Extension-problem instances whose sets do not partition the component.
class InstanceError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace domenum
