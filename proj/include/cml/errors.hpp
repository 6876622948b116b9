#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cml {

/// Base class of every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A precondition of an operation was violated by its caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A tabulation or stratum would exceed its configured size budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long required, unsigned long long budget)
      : Error(what + ": requires " + std::to_string(required) + ", budget " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}
  unsigned long long required() const { return required_; }
  unsigned long long budget() const { return budget_; }

 private:
  unsigned long long required_;
  unsigned long long budget_;
};

}  // namespace cml
