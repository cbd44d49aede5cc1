#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hibi {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (posets, lattices, documents).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Document syntax error; carries a 1-based line and column.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : ValidationError(what + " at line " + std::to_string(line) + ", column " +
                        std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An operation was called outside its domain (x not below y, labeling not in T^(n), ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A cross-check between two independent routes disagreed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// 64-bit integer overflow in labeling arithmetic.
class OverflowError : public Error {
 public:
  using Error::Error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::int64_t pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

/// Floor division (rounds toward negative infinity); divisor must be positive.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

}  // namespace checked
}  // namespace hibi
