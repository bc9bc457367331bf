#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramcut {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed input file. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A configured size limit was hit before the computation finished.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t cap, std::size_t progress)
      : std::runtime_error(what), cap_(cap), progress_(progress) {}

  std::size_t cap() const noexcept { return cap_; }
  /// Where the computation stood when it stopped (horizon, frontier size, ...).
  std::size_t progress() const noexcept { return progress_; }

 private:
  std::size_t cap_;
  std::size_t progress_;
};

/// Numerical routine failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace ramcut
