#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cantorcert {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Floor division for arbitrary signs (cpp_int '/' truncates toward zero).
Integer floor_div(const Integer& a, const Integer& b);

/// Largest integer <= q.
Integer rational_floor(const Rational& q);

/// 3^e as an exact integer. Throws for e beyond a sanity cap.
Integer pow3(unsigned long e);

/// 3^-e as an exact rational.
Rational pow3_inv(unsigned long e);

/// 2^e as an exact integer.
Integer pow2(unsigned long e);

/// Lowest-terms decimal form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

} // namespace cantorcert
