#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace covlab {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p" (q > 0 after normalization). Throws ValidationError.
Rat parse_rat(const std::string& text);

// Always emits "p/q" in lowest terms, q > 0 ("3" -> "3/1").
std::string format_rat(const Rat& r);

// Float with 9 significant digits, the report format.
std::string format_double(double x);

// log2 of a positive big integer; exact for powers of two.
double log2_big(const BigInt& n);

}  // namespace covlab
