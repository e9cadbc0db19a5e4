#pragma once

#include <stdexcept>
#include <string>

namespace nesto {

// Caller broke an operation's input contract.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A result that cannot occur for valid input; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nesto
