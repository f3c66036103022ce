#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace spdisj {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int m);

// "num/den" for every value, including integers ("3/1") and zero ("0/1").
std::string to_fraction_string(const Rational& q);

// Parses "num/den" or a plain integer; the result is reduced.
Rational parse_fraction(const std::string& text);

}  // namespace spdisj
