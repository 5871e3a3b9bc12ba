#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace planemld {

// Arbitrary-precision rational, always stored in canonical reduced form
// (gcd(|num|, den) = 1, den >= 1). mpq_class maintains exactly that.
using Rational = mpq_class;
using Integer = mpz_class;

/// Integer/Rational from machine words. gmpxx lacks long long constructors
/// on this platform; long is 64-bit here, so the conversion is exact.
inline Integer big(long long n) { return Integer(static_cast<long>(n)); }
inline Rational rat(long long num, long long den = 1) {
  Rational q(big(num), big(den));
  q.canonicalize();
  return q;
}

/// Parses "3", "-5/6", "+7/2". Throws std::invalid_argument on bad syntax.
Rational parse_rational(const std::string& text);

/// "n" or "n/d" with d > 1.
std::string to_string(const Rational& q);

/// Smallest integer >= q.
Integer ceil_of(const Rational& q);

/// Exact conversion to long long; throws std::overflow_error if it does not fit.
long long to_ll(const Integer& z);

}  // namespace planemld
