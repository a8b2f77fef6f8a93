#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vedic {

// Caller-side contract violations: mixed bases, malformed widths, bad flags.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : UsageError(what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Arithmetic outside the domain of natural numbers.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public ArithmeticError {
 public:
  DivisionByZero() : ArithmeticError("division by zero") {}
};

class Underflow : public ArithmeticError {
 public:
  Underflow() : ArithmeticError("subtraction underflow: minuend smaller than subtrahend") {}
};

// RSA precondition failures (non-prime factors, non-invertible exponent,
// oversized messages).
class KeyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class KeyFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vedic
