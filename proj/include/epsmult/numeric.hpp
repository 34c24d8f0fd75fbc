#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace epsmult {

/// Arbitrary-precision integer used for lengths, counts and determinants.
using Integer = boost::multiprecision::cpp_int;
/// Exact rational; always kept in lowest terms by the backend.
using Rational = boost::multiprecision::cpp_rational;

/// Exponent of a single variable.
using Exponent = std::int32_t;

inline Integer numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  return Rational(num, den);
}

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Fixed-point rendering with `digits` fractional digits, rounded half away
/// from zero. Display only; every computation stays exact.
std::string to_decimal(const Rational& q, int digits = 12);

/// n! as an exact integer.
Integer factorial(unsigned n);

/// base^exp for a nonnegative exponent.
Integer ipow(const Integer& base, unsigned exp);

}  // namespace epsmult
