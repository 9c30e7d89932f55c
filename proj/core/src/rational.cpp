#include "covlab/rational.hpp"

#include <cmath>
#include <cstdio>

#include "covlab/errors.hpp"

namespace covlab {

Rat parse_rat(const std::string& text) {
  auto bad = [&] { return ValidationError("not a rational \"p/q\": '" + text + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(text));
    BigInt p(text.substr(0, slash));
    BigInt q(text.substr(slash + 1));
    if (q == 0) throw bad();
    return Rat(p, q);
  } catch (const std::exception&) {
    throw bad();
  }
}

std::string format_rat(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

double log2_big(const BigInt& n) {
  if (n <= 0) throw ValidationError("log2 of non-positive integer");
  auto bits = boost::multiprecision::msb(n);
  if (bits <= 62) return std::log2(n.convert_to<double>());
  BigInt top = n >> (bits - 62);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 62);
}

}  // namespace covlab
