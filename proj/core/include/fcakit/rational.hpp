#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace fcakit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(unsigned n, unsigned k);

// Accepts "p/q", plain integers and decimal literals ("0.5" -> 1/2).
Rational parse_rational(const std::string& text);

// Reduced "p/q"; integers render without the "/q" part.
std::string fraction_string(const Rational& r);

// Fixed-point decimal with banker's (half-even) rounding.
std::string decimal_string(const Rational& r, unsigned precision);

double to_double(const Rational& r);

}  // namespace fcakit
