#pragma once

#include <stdexcept>
#include <string>

namespace hypnorm {

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A series or integral that is known to diverge for the given arguments.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative method hit its iteration cap or failed its error estimate.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The operator is not bounded on the requested space (sigma <= 1/p - 1).
class UnboundedOperatorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hypnorm
