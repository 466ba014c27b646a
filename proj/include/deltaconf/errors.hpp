#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deltaconf {

/// Malformed textual input. `line()` is 1-based, or 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by exhaustive routines whose input exceeds the enumeration guard.
class TooLargeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Structural inconsistency in a sequence, tree or layout handed to an operation.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RecognitionError : public std::runtime_error {
 public:
  enum class Reason { NotDistanceHereditary, Disconnected, TooSmall };

  RecognitionError(Reason reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Overlap removal found a node whose incident tracks cannot be separated.
class UnresolvableOverlap : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace deltaconf
