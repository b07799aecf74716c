#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pio {

// Exact scalar type used throughout: arbitrary-precision rationals, always
// stored reduced with a positive denominator. Every rank decision in the
// library is exact, so there is no tolerance parameter anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den in canonical form. Throws ParseError when den == 0.
Rational make_rational(Int num, Int den);

// Accepts "integer" or "integer/positive-integer", e.g. "-3", "5/2".
// Throws ParseError on anything else (including zero denominators).
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: "p/q", or just "p" when q == 1.
std::string format_rational(const Rational& value);

} // namespace pio
