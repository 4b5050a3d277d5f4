#pragma once

#include <map>
#include <string>
#include <vector>

#include "rattet/cyclotomic.hpp"
#include "rattet/interval.hpp"

namespace rattet {

/// The angle (constant + t*tau + u*upsilon)*pi in the two parameters tau, upsilon
/// (the parameters themselves are tau*pi and upsilon*pi).
struct AffineAngle {
  Rational constant;
  Rational t;
  Rational u;

  AffineAngle() = default;
  AffineAngle(Rational c, Rational tc = 0, Rational uc = 0)
      : constant(std::move(c)), t(std::move(tc)), u(std::move(uc)) {}

  Rational at(const Rational& tau, const Rational& upsilon) const { return constant + t * tau + u * upsilon; }
  bool is_constant() const { return t == 0 && u == 0; }
  std::string str() const;

  friend AffineAngle operator+(const AffineAngle& x, const AffineAngle& y) {
    return {x.constant + y.constant, x.t + y.t, x.u + y.u};
  }
  friend AffineAngle operator-(const AffineAngle& x, const AffineAngle& y) {
    return {x.constant - y.constant, x.t - y.t, x.u - y.u};
  }
  friend AffineAngle operator*(const Rational& c, const AffineAngle& x) {
    return {c * x.constant, c * x.t, c * x.u};
  }
  friend bool operator==(const AffineAngle& x, const AffineAngle& y) {
    return x.constant == y.constant && x.t == y.t && x.u == y.u;
  }
};

struct ParameterBox {
  Rational t_lo, t_hi;
  Rational u_lo = 0, u_hi = 0;
};

/// Finite sum of rational multiples of cos(AffineAngle). Terms whose cosine is a
/// rational constant are folded into the constant term.
class TrigPolynomial {
 public:
  TrigPolynomial() = default;
  explicit TrigPolynomial(const Rational& c);
  static TrigPolynomial cosine(const AffineAngle& arg, const Rational& coeff = 1);
  static TrigPolynomial sine(const AffineAngle& arg, const Rational& coeff = 1);

  TrigPolynomial& operator+=(const TrigPolynomial& y);
  TrigPolynomial& operator-=(const TrigPolynomial& y);
  TrigPolynomial& operator*=(const Rational& c);
  friend TrigPolynomial operator+(TrigPolynomial x, const TrigPolynomial& y) { return x += y; }
  friend TrigPolynomial operator-(TrigPolynomial x, const TrigPolynomial& y) { return x -= y; }
  friend TrigPolynomial operator-(const TrigPolynomial& x) { return Rational(-1) * x; }
  friend TrigPolynomial operator*(const Rational& c, TrigPolynomial x) { return x *= c; }
  friend TrigPolynomial operator*(const TrigPolynomial& x, const TrigPolynomial& y);

  // d/dtau and d/dupsilon, each divided by pi.
  TrigPolynomial derivative_t() const;
  TrigPolynomial derivative_u() const;

  bool is_constant() const;
  Rational constant_term() const;
  std::size_t term_count() const { return terms_.size(); }
  std::vector<std::pair<Rational, AffineAngle>> terms() const;

  // Exact value at a rational parameter point.
  CyclotomicNumber at(const Rational& tau, const Rational& upsilon = 0) const;
  int sign_at(const Rational& tau, const Rational& upsilon = 0) const;
  /// True iff the function vanishes for all parameter values: each frequency
  /// class must have a vanishing complex amplitude.
  bool is_identically_zero() const;
  // Distinct tau-frequencies (with both signs and zero).
  std::vector<Rational> t_frequencies() const;
  std::vector<Rational> u_frequencies() const;

  SignedInterval enclose(const ParameterBox& box, int bits) const;
  std::string str() const;

 private:
  struct Key {
    Rational t, u, constant;
    friend bool operator<(const Key& x, const Key& y) {
      if (int c = cmp(x.t, y.t)) return c < 0;
      if (int c = cmp(x.u, y.u)) return c < 0;
      return cmp(x.constant, y.constant) < 0;
    }
  };
  void add_term(const Rational& coeff, AffineAngle arg);

  Rational constant_ = 0;
  std::map<Key, Rational> terms_;
};

}  // namespace rattet
