#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperlat/error.hpp"

namespace hyperlat {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

}  // namespace checked

inline Int abs_value(Int a) { return a < 0 ? checked::neg(a) : a; }

// gcd of all entries; 0 for an all-zero span.
inline Int content(std::span<const Int> xs) {
  Int g = 0;
  for (Int x : xs) g = std::gcd(g, x);
  return g;
}

// Floor of the square root for a >= 0 (integer Newton iteration).
inline Int isqrt(Int a) {
  if (a < 0) throw DomainError("negative-sqrt", "isqrt of a negative number");
  if (a < 2) return a;
  Int x = a;
  Int y = x / 2 + x % 2;
  while (y < x) {
    x = y;
    y = (x + a / x) / 2;
  }
  return x;
}

inline bool is_square(Int a, Int* root = nullptr) {
  if (a < 0) return false;
  Int r = isqrt(a);
  if (root) *root = r;
  return r * r == a;
}

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace hyperlat
