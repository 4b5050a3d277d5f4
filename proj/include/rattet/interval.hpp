#pragma once

#include <string>

#include "rattet/rational_angle.hpp"

namespace rattet {

/// Closed interval [lo, hi] with exact rational endpoints.
struct SignedInterval {
  Rational lo;
  Rational hi;
  int precision = 0;

  static SignedInterval point(const Rational& x) { return {x, x, 0}; }

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  // +1 or -1 when the interval excludes zero, 0 otherwise.
  int certain_sign() const;
  bool strictly_inside(const Rational& a, const Rational& b) const { return a < lo && hi < b; }
  std::string str(int digits = 20) const;
};

SignedInterval operator+(const SignedInterval& x, const SignedInterval& y);
SignedInterval operator-(const SignedInterval& x, const SignedInterval& y);
SignedInterval operator-(const SignedInterval& x);
SignedInterval operator*(const SignedInterval& x, const SignedInterval& y);
SignedInterval operator*(const Rational& c, const SignedInterval& x);
// Throws std::domain_error when the divisor contains zero.
SignedInterval operator/(const SignedInterval& x, const SignedInterval& y);
SignedInterval hull(const SignedInterval& x, const SignedInterval& y);

// Rounds both endpoints outward to dyadic rationals with `bits` significant bits.
SignedInterval round_outward(const SignedInterval& x, int bits);

/// Enclosure of cos(x*pi) for rational x; exact when the cosine is rational.
SignedInterval enclose_cos_pi(const Rational& x, int bits);
SignedInterval enclose_sin_pi(const Rational& x, int bits);
/// Enclosure of cos over all arguments in [lo, hi]*pi.
SignedInterval enclose_cos_pi_range(const Rational& lo, const Rational& hi, int bits);
SignedInterval enclose_pi(int bits);
// Requires x.lo >= 0.
SignedInterval interval_sqrt(const SignedInterval& x, int bits);
/// Enclosure of arccos(x)/pi; x is clipped to [-1, 1].
SignedInterval interval_acos_over_pi(const SignedInterval& x, int bits);

// Cosine of x*pi when it is rational (x mod 2 in {0, 1/3, 1/2, 2/3, 1, 4/3, 3/2, 5/3}).
bool rational_cosine(const Rational& x, Rational& value);

}  // namespace rattet
