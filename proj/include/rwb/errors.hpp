#pragma once

#include <stdexcept>
#include <string>

namespace rwb {

/// Invalid arguments or infeasible problem data supplied by the caller.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed file contents (JSON syntax or schema violations).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An iterative solver exhausted its iteration budget before reaching tolerance.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& msg, double residual)
      : std::runtime_error(msg), last_residual(residual) {}
  double last_residual = 0.0;
};

/// Problem size exceeds what the requested (exact) code path is built for.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rwb
