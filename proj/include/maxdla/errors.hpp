#pragma once

#include <stdexcept>
#include <string>

namespace maxdla {

// Malformed or out-of-contract input: bad vertex, non-simple digraph where a
// simple one is required, wrong graph class for the chosen solver.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive search or bounded-degree recursion declined to run because
// the instance exceeds its configured limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A produced certificate failed its independent recomputation.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace maxdla
