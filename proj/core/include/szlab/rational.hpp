#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace szlab {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q" (any sign on p, q > 0). Decimal points, exponents and
// anything else that would smuggle floating point in are rejected with kParseError.
Rational parse_rational(std::string_view text);

// num/den in lowest terms. mpq_class(num, den) leaves the fraction as written, and
// GMP comparisons assume canonical operands.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Lowest terms, "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Integer floor(const Rational& value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

// Non-negative integer power.
Rational pow(const Rational& base, unsigned long exponent);

}  // namespace szlab
