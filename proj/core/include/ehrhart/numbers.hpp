#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ehrhart {

// Expression templates are disabled so `auto` always yields a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

// Strict decimal integer: optional sign followed by digits. Throws
// std::invalid_argument on anything else (no hex, no exponent, no '.').
Integer parse_integer(std::string_view text);

// "p/q" or a bare integer, surrounding whitespace ignored.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
// Renders "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& value);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

inline Integer numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline int sign(const Integer& v) { return v.sign(); }
inline int sign(const Rational& v) { return v.sign(); }

}  // namespace ehrhart
