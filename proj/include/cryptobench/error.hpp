#pragma once

#include <stdexcept>
#include <string>

namespace cryptobench {

// Precondition or input-format violation.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A randomized search hit its query/hash budget without a result.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An algebraic attack found no consistent solution (malformed instance).
class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cryptobench
