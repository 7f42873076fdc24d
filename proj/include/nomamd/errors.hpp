#pragma once

#include <stdexcept>

namespace nomamd {

// An iterative numeric scheme (series, continued fraction, quadrature)
// failed to reach its accuracy target.  Never silently return a bad value.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A power/threshold allocation leaves some message with a non-positive
// effective power margin, so the joint decoding event has probability zero.
class InfeasibleAllocation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No (P2, theta2) pair can deliver the requested minimum rate.
class InfeasibleTmr : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nomamd
