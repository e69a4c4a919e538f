#pragma once

#include <stdexcept>
#include <string>

namespace radon {

/// Valuation requested for a quantity that is zero at the working precision.
class IndeterminateValuation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact mantissa no longer fits the fixed-width representation.
class PrecisionOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Cells of a function overlap, or a C_c function has a cell containing 0.
class InvalidCellFunction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cyclotomic value needs a larger conductor than the configured cap.
class InsufficientConductor : public std::domain_error {
 public:
  InsufficientConductor(int prime, int required, int cap)
      : std::domain_error("cyclotomic conductor " + std::to_string(prime) + "^" +
                          std::to_string(required) + " required (cap " +
                          std::to_string(prime) + "^" + std::to_string(cap) + ")"),
        required_(required) {}
  int required() const noexcept { return required_; }

 private:
  int required_;
};

/// Argument hit a pole of a Gamma-type expression.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A jet-based pairing needs more Taylor coefficients than were supplied.
class JetOrderError : public std::invalid_argument {
 public:
  JetOrderError(int required, int supplied)
      : std::invalid_argument("jet order " + std::to_string(required) + " required, got " +
                              std::to_string(supplied)),
        required_(required) {}
  int required() const noexcept { return required_; }

 private:
  int required_;
};

/// Polar dual of a polygon whose interior misses the origin.
class UnboundedDual : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace radon
