#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nestpart {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when user-supplied inputs (configs, meshes, tables) are invalid.
// The CLI maps these to exit code 2.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Raised when a requested device set cannot be satisfied by the interior
// elements of a node range. Carries the largest feasible request.
class InfeasiblePartitionError : public ValidationError {
public:
  InfeasiblePartitionError(std::int64_t requested, std::int64_t max_feasible)
      : ValidationError("requested device set of " + std::to_string(requested) +
                        " elements, but only " + std::to_string(max_feasible) +
                        " interior elements are available (max feasible k_dev = " +
                        std::to_string(max_feasible) + ")"),
        requested(requested), max_feasible(max_feasible) {}

  std::int64_t requested;
  std::int64_t max_feasible;
};

} // namespace nestpart
