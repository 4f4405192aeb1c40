#pragma once

#include <stdexcept>
#include <string>

namespace partcat {

/// Malformed numeric input or an invalid vector (negative entry, bad normalization).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold for the given inputs.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace partcat
