#pragma once

#include <stdexcept>
#include <string>

namespace polnum {

// Invalid user input or an argument outside an operation's domain.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string &what) : std::runtime_error(what) {}
};

// An internal identity failed to hold. Always a bug.
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string &what)
      : std::logic_error(what) {}
};

} // namespace polnum
