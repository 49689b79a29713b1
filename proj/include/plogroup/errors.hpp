#pragma once

#include <stdexcept>
#include <string>

namespace plogroup {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Division by zero and friends.
struct arithmetic_error : error {
  using error::error;
};

// A value outside the domain of a map ([0,1]).
struct domain_error : error {
  using error::error;
};

// A structurally valid value that violates an operation's precondition.
struct argument_error : error {
  using error::error;
};

// Malformed external input (text, JSON, tree diagrams).
struct validation_error : error {
  using error::error;
};

// An internal classification that should be impossible for sane inputs;
// signals a bug or a non-injective/non-solvable input.
struct structural_error : error {
  using error::error;
};

}  // namespace plogroup
