#pragma once

#include <stdexcept>
#include <string>

namespace fanar {

// Graph or set exceeds kMaxVertices.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed graph / coloring / partition text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search hit its node cap before finishing.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructive procedure failed on input that met its preconditions.
// Always indicates a bug, never a property of the input.
class ExtensionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fanar
