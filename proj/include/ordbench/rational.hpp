#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ordbench {

// All application-pipeline arithmetic is exact; no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p", "-p", or "p/q" (q ≠ 0). Throws parse_error.
Rational parse_rational(const std::string& text);

// Lowest terms; "p/q" with the slash omitted when q = 1.
std::string format_rational(const Rational& value);

// 2^n as an exact integer.
BigInt pow2(unsigned n);

}  // namespace ordbench
