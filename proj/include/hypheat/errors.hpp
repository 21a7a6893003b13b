#pragma once

#include <stdexcept>
#include <string>

namespace hypheat {

// Caller passed arguments outside an operation's supported range
// (unsupported dimension, alpha <= 1 with k > 0, t1 >= t2, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is in the operation's nominal range but outside its mathematical
// domain (t <= 0, coincident points, negative radicand, Phi pole).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A HyperPoint that is not on the hyperboloid beyond rounding noise.
class InvalidPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Quadrature failed to reach its accuracy target.
class NumericalAccuracyError : public std::runtime_error {
 public:
  NumericalAccuracyError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved_error() const noexcept { return achieved_; }

 private:
  double achieved_;
};

// An exact series check found a mismatching or wrongly signed coefficient.
class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(const std::string& what, long k)
      : std::runtime_error(what), k_(k) {}
  long k() const noexcept { return k_; }

 private:
  long k_;
};

}  // namespace hypheat
