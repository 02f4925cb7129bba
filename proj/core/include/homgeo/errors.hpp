#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace homgeo {

/// Argument outside the mathematical domain of an operation (negative isqrt,
/// zero divisor, r < 3 for growth bounds, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Classification hypotheses are violated (fewer than 3 points on a line,
/// dimension below the required threshold).
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters the model does not cover, e.g. alpha' outside {0, 1}.
class ModelScopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was asked to compute a case whose impossibility is imported
/// rather than verified here.
class ExternalProvenanceError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Argument below the range where a case's obstruction is defined. Carries the
/// known small survivors so callers can report them.
class RangeError : public std::out_of_range {
 public:
  RangeError(const std::string& what, std::vector<std::string> known_survivors)
      : std::out_of_range(what), known_survivors_(std::move(known_survivors)) {}

  const std::vector<std::string>& known_survivors() const noexcept { return known_survivors_; }

 private:
  std::vector<std::string> known_survivors_;
};

class UnsupportedFieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two flats of the same dimension have different sizes.
class HomogeneityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A profile does not fit the parameter model (non-integral alpha).
class ModelMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity the code relies on did not hold.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace homgeo
