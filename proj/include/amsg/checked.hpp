#pragma once

// Exact 64-bit integer arithmetic with overflow detection. All computations
// in this library are exact; an overflow is reported as an error, never as
// wraparound.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace amsg {

using Int = std::int64_t;

// A computation would leave the 64-bit range (or a membership table would
// exceed the hard size cap).
struct overflow_error : std::range_error {
  using std::range_error::range_error;
};

// Invalid input: empty generator list, nonpositive element, gcd > 1 where a
// numerical semigroup is required, degree out of range, and the like.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw overflow_error("integer overflow in multiplication");
  return r;
}

inline Int gcd_all(const std::vector<Int>& xs) {
  Int g = 0;
  for (Int x : xs) g = std::gcd(g, x);
  return g;
}

}  // namespace amsg
