#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on a graph argument does not hold (unknown vertex, wrong edge kind, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A desk-scale guardrail (edge cap, vertex cap, component-size cap) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed graph text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cgk
