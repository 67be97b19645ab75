#pragma once

#include <stdexcept>
#include <string>

namespace solv {

// Point outside a map's domain (off a leaf, non-positive radius, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric evaluation hit a pole or a degenerate metric.
struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Expression cannot be brought into the requested coefficient form.
struct FormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// Bad input to a function or command (unknown id, missing binding, ...).
struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace solv
