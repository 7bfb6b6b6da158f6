#pragma once

#include <stdexcept>
#include <string>

namespace qcy {

/// Input outside an operation's domain (zero quaternion, h <= 0, lambda <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at the pole of a Cayley map, sigma or the Kelvin transform.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A computed object violated an identity it must satisfy by construction.
/// Signals a frame or convention bug, never bad user input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double partial, double error)
      : std::runtime_error(what), partial_(partial), error_(error) {}
  double partial() const noexcept { return partial_; }
  double error() const noexcept { return error_; }

 private:
  double partial_;
  double error_;
};

}  // namespace qcy
