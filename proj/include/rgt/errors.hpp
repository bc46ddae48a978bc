#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rgt {

/// Base class for every error the engine raises.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or alternative text. `position` is the 0-based
/// character offset into the input where the problem was detected.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

/// Relationship graph that cannot be turned into a polynomial and for
/// which no usable importance ranking was supplied.
struct NotDecomposableError : Error {
  using Error::Error;
};

/// Asimov policy that filters out every alternative (empty approved set).
struct PolicyError : Error {
  using Error::Error;
};

/// Scenario file, task, or argument validation failure.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace rgt
