#pragma once

#include <stdexcept>

namespace jcouple {

/// Raised when a quantum number or other domain input violates an operation's
/// precondition (negative j, |m| > j, non-triangle, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace jcouple
