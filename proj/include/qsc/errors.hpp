#pragma once

#include <stdexcept>

namespace qsc {

// Input violates a model precondition (bad operator, reducible representation,
// wrong dimensions, oversized instance). The CLI maps these to exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem or serialization failure. The CLI maps these to exit code 1.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qsc
