#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace calambda {

/// Parameters violate a hypothesis (k >= t >= 2, v >= 2, lambda >= 1, ...).
/// The message names the violated constraint.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A proven-impossible state was reached; indicates an arithmetic bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Interaction table would exceed the configured cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A randomized construction ran out of its resample/retry budget.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, std::vector<std::string> details)
      : std::runtime_error(what), details_(std::move(details)) {}

  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  std::vector<std::string> details_;
};

/// Malformed array text file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace calambda
