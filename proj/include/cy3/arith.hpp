// Checked 64-bit integer arithmetic and the error types shared by every module.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cy3 {

using Int = std::int64_t;

/// Raised when an intermediate value does not fit in Int.  Results are never
/// allowed to wrap around.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Input outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two classes (or a class and a Gram matrix) expressed in different bases.
class BasisMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An odd self-intersection in what must be an even lattice.
class ParityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in sub");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int abs_checked(Int a) { return a < 0 ? neg(a) : a; }

/// Floor division (rounds toward negative infinity), b != 0.
inline Int floor_div(Int a, Int b) {
  if (b == 0) throw DomainError("division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Non-negative remainder, b > 0.
inline Int mod_pos(Int a, Int b) {
  Int r = a % b;
  return r < 0 ? r + b : r;
}

/// True iff b divides a exactly (b != 0).
inline bool divides(Int b, Int a) { return b != 0 && a % b == 0; }

/// Integer square root; returns -1 when n is negative or not a perfect square.
Int exact_isqrt(Int n);

struct ExtGcd {
  Int g;  // gcd >= 0
  Int s;
  Int t;  // g == s*a + t*b
};

ExtGcd ext_gcd(Int a, Int b);

}  // namespace cy3
