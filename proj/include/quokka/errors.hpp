#pragma once

#include <stdexcept>
#include <string>

namespace quokka {

/// Raised when an argument violates a mathematical hypothesis of an operation.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an enumeration exceeds its element budget.
class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised when two independent routes to the same quantity disagree.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised for well-formed requests the library does not handle (e.g. a group family
/// without builtin generators).
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quokka
