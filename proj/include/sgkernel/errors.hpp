#pragma once

#include <stdexcept>
#include <string>

namespace sgkernel {

// Malformed input documents or CLI arguments. CLI exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition or structural failures in the algebra. CLI exit code 3.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sgkernel
