#pragma once

#include <stdexcept>
#include <string>

namespace risemf {

// Base for all library-thrown errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A parameter failed validation. `field()` names the offending entry.
class ValidationError : public Error {
public:
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

// A quadrature or series failed to reach the requested tolerance.
// Carries the partial result and the last error estimate.
class NumericalError : public Error {
public:
  NumericalError(const std::string& what, double partial, double tail)
      : Error(what), partial_(partial), tail_(tail) {}
  double partial() const { return partial_; }
  double tail_estimate() const { return tail_; }

private:
  double partial_;
  double tail_;
};

// An argument is outside the mathematical domain of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

// A root/quantile bracket does not straddle the target.
class BracketError : public Error {
public:
  BracketError(const std::string& what, double f_lo, double f_hi)
      : Error(what), f_lo_(f_lo), f_hi_(f_hi) {}
  double f_lo() const { return f_lo_; }
  double f_hi() const { return f_hi_; }

private:
  double f_lo_;
  double f_hi_;
};

}  // namespace risemf
