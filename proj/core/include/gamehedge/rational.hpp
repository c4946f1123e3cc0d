#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace gamehedge {

// Every quantity in the engine is an exact rational; no floating point
// anywhere on a pricing path.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p", "p/q" or "-p/q" (base-10 digits). Returns nothing on malformed
// input or zero denominator.
std::optional<Rational> try_parse_rational(const std::string& text);

// Same, but throws std::invalid_argument with the offending text.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, "p/q" otherwise (q > 0,
// gcd(|p|, q) = 1). parse_rational(format_rational(r)) == r.
std::string format_rational(const Rational& r);

// Fixed-point decimal approximation with the given number of fractional
// digits, rounded half away from zero. Display only.
std::string format_decimal(const Rational& r, int digits);

inline Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational rational_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational positive_part(const Rational& a) { return a > 0 ? a : Rational(0); }
inline Rational negative_part(const Rational& a) { return a < 0 ? Rational(-a) : Rational(0); }

}  // namespace gamehedge
