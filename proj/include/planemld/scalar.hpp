#pragma once

#include <optional>
#include <string>
#include <utility>

#include "planemld/rational.hpp"

namespace planemld {

enum class Ordering { Less, Equal, Greater };

/// A number of the form a + b*pi + c/pi with rational a, b, c.
/// Equality is componentwise; the representation is canonical because each
/// component is a reduced rational. Values are immutable in spirit: all
/// operations below return fresh scalars.
struct ExactScalar {
  Rational a{0};
  Rational b{0};
  Rational c{0};

  ExactScalar() = default;
  ExactScalar(Rational a_, Rational b_, Rational c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

  static ExactScalar of(Rational q) { return {std::move(q), 0, 0}; }
  static ExactScalar of_int(long long n) { return {rat(n), 0, 0}; }
  static ExactScalar pi_times(Rational q) { return {0, std::move(q), 0}; }
  static ExactScalar inv_pi_times(Rational q) { return {0, 0, std::move(q)}; }
  static ExactScalar zero() { return {}; }

  bool is_rational() const { return b == 0 && c == 0; }
  bool is_zero() const { return a == 0 && b == 0 && c == 0; }

  bool operator==(const ExactScalar& o) const {
    return a == o.a && b == o.b && c == o.c;
  }
};

ExactScalar add(const ExactScalar& x, const ExactScalar& y);
ExactScalar sub(const ExactScalar& x, const ExactScalar& y);
ExactScalar neg(const ExactScalar& x);
ExactScalar scale(const ExactScalar& x, const Rational& q);

/// Product of two scalars when the result stays inside Q + Q*pi + Q/pi.
/// The cross terms pi*pi and (1/pi)*(1/pi) leave the space, so the product
/// exists iff x.b*y.b == 0 and x.c*y.c == 0. Returns nullopt otherwise.
std::optional<ExactScalar> try_mul(const ExactScalar& x, const ExactScalar& y);

/// An interval (lo, hi) with lo < pi < hi and hi - lo <= 10^(-digits).
/// digits >= 1. Results are cached and nested across calls.
std::pair<Rational, Rational> pi_interval(int digits);

/// Exact sign of x: -1, 0, +1. Decidable because pi is transcendental:
/// a + b*pi + c/pi with (b,c) != (0,0) is never zero, so interval refinement
/// terminates. A hard cap (10 doublings of digits starting at 8) guards the
/// loop; exceeding it throws std::runtime_error, never reports Equal.
int sign(const ExactScalar& x);

Ordering compare(const ExactScalar& x, const ExactScalar& y);

inline bool less(const ExactScalar& x, const ExactScalar& y) {
  return compare(x, y) == Ordering::Less;
}

/// Sign of A + B*pi + C/pi for machine-word coefficients. Fast path for the
/// solver's inner loops; exact (falls back to full interval refinement when
/// a certified fixed-precision bracket cannot decide).
int sign_combo(long long A, long long B, long long C);

/// Text syntax: terms joined by '+'/'-'; each term is a rational optionally
/// followed by "*pi" or "/pi", or bare "pi". Examples: "3", "5/6", "2/pi",
/// "3*pi", "1/2 + 2/pi". Whitespace-insensitive.
ExactScalar parse_scalar(const std::string& text);

std::string to_string(const ExactScalar& x);

}  // namespace planemld
