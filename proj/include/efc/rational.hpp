#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "efc/error.hpp"

namespace efc {

// Exact arbitrary-precision rational. cpp_rational keeps the canonical form we
// rely on (denominator > 0, gcd-reduced).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
  require(den != 0, "ZeroDenominator", "rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    require(den != 0, "ZeroDenominator", "rational with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::exception&) {
    fail("BadRational", "cannot parse rational: " + text);
  }
}

inline std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace efc
