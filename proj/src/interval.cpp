#include "rattet/interval.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <mpfr.h>

namespace rattet {

namespace {

class Mpfr {
 public:
  explicit Mpfr(int bits) { mpfr_init2(v_, bits); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  ~Mpfr() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  Rational to_rational() const {
    Rational r;
    mpfr_get_q(r.get_mpq_t(), v_);
    return r;
  }

 private:
  mpfr_t v_;
};

int working_bits(int bits) { return std::max(bits, 53) + 16; }

// x mod 2, folded into [0, 1] so that cos(x pi) is unchanged.
Rational fold_half_turn(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (mpz_odd_p(q.get_mpz_t())) q -= 1;
  Rational y = x - Rational(q);
  if (y > 1) y = 2 - y;
  return y;
}

SignedInterval clamp_unit(SignedInterval s) {
  if (s.lo < -1) s.lo = -1;
  if (s.hi > 1) s.hi = 1;
  return s;
}

}  // namespace

int SignedInterval::certain_sign() const {
  if (lo > 0) return 1;
  if (hi < 0) return -1;
  return 0;
}

std::string SignedInterval::str(int digits) const {
  std::ostringstream out;
  mpf_class l(lo, 4 * digits + 64), h(hi, 4 * digits + 64);
  out << std::setprecision(digits) << "[" << l << ", " << h << "]";
  return out.str();
}

SignedInterval operator+(const SignedInterval& x, const SignedInterval& y) {
  return {x.lo + y.lo, x.hi + y.hi, std::min(x.precision, y.precision)};
}

SignedInterval operator-(const SignedInterval& x) { return {-x.hi, -x.lo, x.precision}; }

SignedInterval operator-(const SignedInterval& x, const SignedInterval& y) { return x + (-y); }

SignedInterval operator*(const SignedInterval& x, const SignedInterval& y) {
  Rational c[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4), std::min(x.precision, y.precision)};
}

SignedInterval operator*(const Rational& c, const SignedInterval& x) {
  if (c >= 0) return {c * x.lo, c * x.hi, x.precision};
  return {c * x.hi, c * x.lo, x.precision};
}

SignedInterval operator/(const SignedInterval& x, const SignedInterval& y) {
  if (y.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  SignedInterval inv{1 / y.hi, 1 / y.lo, y.precision};
  return x * inv;
}

SignedInterval hull(const SignedInterval& x, const SignedInterval& y) {
  return {std::min(x.lo, y.lo), std::max(x.hi, y.hi), std::min(x.precision, y.precision)};
}

SignedInterval round_outward(const SignedInterval& x, int bits) {
  Mpfr lo(bits), hi(bits);
  mpfr_set_q(lo.get(), x.lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), x.hi.get_mpq_t(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational(), bits};
}

bool rational_cosine(const Rational& x, Rational& value) {
  Rational y = fold_half_turn(x);
  if (y == 0) value = 1;
  else if (y == 1) value = -1;
  else if (y == Rational(1, 2)) value = 0;
  else if (y == Rational(1, 3)) value = Rational(1, 2);
  else if (y == Rational(2, 3)) value = Rational(-1, 2);
  else return false;
  return true;
}

SignedInterval enclose_pi(int bits) {
  int w = working_bits(bits);
  Mpfr lo(w), hi(w);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational(), bits};
}

SignedInterval enclose_cos_pi(const Rational& x, int bits) {
  Rational exact;
  if (rational_cosine(x, exact)) return {exact, exact, bits};
  Rational y = fold_half_turn(x);
  int w = working_bits(bits);
  Mpfr pi_lo(w), pi_hi(w), th_lo(w), th_hi(w), c_lo(w), c_hi(w);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_mul_q(th_lo.get(), pi_lo.get(), y.get_mpq_t(), MPFR_RNDD);
  mpfr_mul_q(th_hi.get(), pi_hi.get(), y.get_mpq_t(), MPFR_RNDU);
  if (mpfr_sgn(th_lo.get()) >= 0 && mpfr_cmp(th_hi.get(), pi_lo.get()) <= 0) {
    // cos is decreasing on [0, pi]
    mpfr_cos(c_lo.get(), th_hi.get(), MPFR_RNDD);
    mpfr_cos(c_hi.get(), th_lo.get(), MPFR_RNDU);
    return clamp_unit({c_lo.to_rational(), c_hi.to_rational(), bits});
  }
  // |cos' | <= 1: widen by the argument uncertainty
  Mpfr width(w);
  mpfr_sub(width.get(), th_hi.get(), th_lo.get(), MPFR_RNDU);
  mpfr_cos(c_lo.get(), th_lo.get(), MPFR_RNDD);
  mpfr_cos(c_hi.get(), th_lo.get(), MPFR_RNDU);
  mpfr_sub(c_lo.get(), c_lo.get(), width.get(), MPFR_RNDD);
  mpfr_add(c_hi.get(), c_hi.get(), width.get(), MPFR_RNDU);
  return clamp_unit({c_lo.to_rational(), c_hi.to_rational(), bits});
}

SignedInterval enclose_sin_pi(const Rational& x, int bits) {
  return enclose_cos_pi(Rational(1, 2) - x, bits);
}

SignedInterval enclose_cos_pi_range(const Rational& lo, const Rational& hi, int bits) {
  if (lo > hi) throw std::invalid_argument("enclose_cos_pi_range: empty range");
  if (hi - lo >= 2) return {-1, 1, bits};
  SignedInterval r = hull(enclose_cos_pi(lo, bits), enclose_cos_pi(hi, bits));
  mpz_class k;
  mpz_cdiv_q(k.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  for (; Rational(k) <= hi; ++k) {
    if (mpz_even_p(k.get_mpz_t())) r.hi = 1;
    else r.lo = -1;
  }
  return r;
}

SignedInterval interval_sqrt(const SignedInterval& x, int bits) {
  if (x.lo < 0) throw std::domain_error("interval_sqrt: negative lower bound");
  int w = working_bits(bits);
  Mpfr lo(w), hi(w);
  mpfr_set_q(lo.get(), x.lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), x.hi.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational(), bits};
}

SignedInterval interval_acos_over_pi(const SignedInterval& x, int bits) {
  int w = working_bits(bits);
  Rational a = std::max(Rational(-1), std::min(Rational(1), x.lo));
  Rational b = std::max(Rational(-1), std::min(Rational(1), x.hi));
  Mpfr lo(w), hi(w), pi_lo(w), pi_hi(w);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  // arccos is decreasing
  mpfr_set_q(lo.get(), b.get_mpq_t(), MPFR_RNDU);
  mpfr_set_q(hi.get(), a.get_mpq_t(), MPFR_RNDD);
  if (mpfr_cmp_si(lo.get(), 1) > 0) mpfr_set_si(lo.get(), 1, MPFR_RNDN);
  if (mpfr_cmp_si(hi.get(), -1) < 0) mpfr_set_si(hi.get(), -1, MPFR_RNDN);
  mpfr_acos(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_acos(hi.get(), hi.get(), MPFR_RNDU);
  mpfr_div(lo.get(), lo.get(), pi_hi.get(), MPFR_RNDD);
  mpfr_div(hi.get(), hi.get(), pi_lo.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational(), bits};
}

}  // namespace rattet
