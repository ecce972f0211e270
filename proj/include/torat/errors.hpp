#pragma once

#include <stdexcept>
#include <string>

namespace torat {

// Thrown when input text cannot be read as the expected format. CLI exit 1.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when well-formed input violates a stated precondition. CLI exit 2.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when two independent computations of the same quantity disagree,
// or an internal invariant fails. Always a bug. CLI exit 3.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace torat
