#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace rigidline {

/// Exact scalar used throughout the certificate pipeline. Arbitrary-precision
/// rational, kept canonical (reduced, positive denominator) by the backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "a", "a/b" or a finite decimal such as "-0.25" into an exact value.
/// Anything else (exponents, repeating-decimal notation, garbage) is rejected
/// with ParseError. No rounding ever happens here.
Rational parse_rational(const std::string& text);

/// Canonical form: "a" when the denominator is 1, otherwise "a/b" with b > 0.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// True when |value| is the square of a rational; the root is written through
/// `root` (nonnegative). Used to decide whether a projection frame can be
/// normalized without leaving the rationals.
bool rational_sqrt(const Rational& value, Rational& root);

using Vec = std::vector<Rational>;

}  // namespace rigidline
