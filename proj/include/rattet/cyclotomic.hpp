#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rattet/interval.hpp"
#include "rattet/rational_angle.hpp"

namespace rattet {

/// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1), reduced
/// modulo the N-th cyclotomic polynomial. Orders are kept odd or divisible by 4
/// (Q(zeta_2m) = Q(zeta_m) for odd m).
class CyclotomicNumber {
 public:
  static constexpr std::int64_t kMaxOrder = 2520;

  CyclotomicNumber();
  explicit CyclotomicNumber(const Rational& r);
  explicit CyclotomicNumber(long r) : CyclotomicNumber(Rational(r)) {}

  // zeta_n^j
  static CyclotomicNumber root_of_unity(std::int64_t j, std::int64_t n);
  // exp(i*pi*x)
  static CyclotomicNumber exp_i_pi(const RationalAngle& x);
  static CyclotomicNumber cosine(const RationalAngle& x);
  // constant + sum of coeff*cos(angle), reduced once.
  static CyclotomicNumber cosine_sum(std::span<const std::pair<Rational, RationalAngle>> terms,
                                     const Rational& constant = 0);
  // sum of coeff*exp(i*pi*angle)
  static CyclotomicNumber exponential_sum(std::span<const std::pair<Rational, RationalAngle>> terms);

  std::int64_t order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;
  bool is_real() const;
  CyclotomicNumber conjugate() const;
  // Same element written in Q(zeta_m); m must be a multiple of order().
  CyclotomicNumber embed(std::int64_t m) const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& y);
  CyclotomicNumber& operator-=(const CyclotomicNumber& y);
  CyclotomicNumber& operator*=(const CyclotomicNumber& y);
  CyclotomicNumber& operator*=(const Rational& c);
  friend CyclotomicNumber operator+(CyclotomicNumber x, const CyclotomicNumber& y) { return x += y; }
  friend CyclotomicNumber operator-(CyclotomicNumber x, const CyclotomicNumber& y) { return x -= y; }
  friend CyclotomicNumber operator*(const CyclotomicNumber& x, const CyclotomicNumber& y);
  friend CyclotomicNumber operator*(const Rational& c, CyclotomicNumber x) { return x *= c; }
  friend bool operator==(const CyclotomicNumber& x, const CyclotomicNumber& y);

 private:
  CyclotomicNumber(std::int64_t order, std::vector<Rational> coeffs);
  void shrink_if_rational();

  std::int64_t order_;
  std::vector<Rational> coeffs_;
};

std::int64_t euler_phi(std::int64_t n);
// Order used to store Q(zeta_n): n/2 when n = 2 mod 4.
std::int64_t normalized_order(std::int64_t n);
// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

CyclotomicNumber cos_as_cyclotomic(const RationalAngle& a);
inline bool is_zero(const CyclotomicNumber& x) { return x.is_zero(); }
/// Exact sign of a real element; throws std::domain_error for non-real input.
int sign(const CyclotomicNumber& x);
/// Certified enclosure of the real part under zeta_N -> exp(2*pi*i/N). Requires bits >= 53.
SignedInterval float_eval(const CyclotomicNumber& x, int bits);
double to_double(const CyclotomicNumber& x);

}  // namespace rattet
