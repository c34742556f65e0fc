#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qopt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid optimizer or algorithm configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Mismatched dimensions between vectors, states, or tensors.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class HeaderError : public ParseError {
 public:
  explicit HeaderError(const std::string& what) : ParseError(what, 0) {}
};

/// A finite-difference stencil hit a non-finite objective value.
class GradientError : public Error {
 public:
  GradientError(const std::string& what, std::size_t index)
      : Error(what + " (component " + std::to_string(index) + ")"), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Pauli algebra produced a result that violates Hermiticity. Indicates a bug.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

class HermiticityError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace qopt
