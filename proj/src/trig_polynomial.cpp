#include "rattet/trig_polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rattet {

namespace {

Rational mod_two(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (mpz_odd_p(q.get_mpz_t())) q -= 1;
  return x - Rational(q);
}

void range_of(const Rational& coeff, const Rational& lo, const Rational& hi, Rational& out_lo, Rational& out_hi) {
  Rational a = coeff * lo, b = coeff * hi;
  out_lo += std::min(a, b);
  out_hi += std::max(a, b);
}

}  // namespace

std::string AffineAngle::str() const {
  std::ostringstream out;
  out << constant;
  if (t != 0) out << (t > 0 ? " + " : " - ") << abs(t) << "*t";
  if (u != 0) out << (u > 0 ? " + " : " - ") << abs(u) << "*u";
  return out.str();
}

TrigPolynomial::TrigPolynomial(const Rational& c) : constant_(c) {}

TrigPolynomial TrigPolynomial::cosine(const AffineAngle& arg, const Rational& coeff) {
  TrigPolynomial p;
  p.add_term(coeff, arg);
  return p;
}

TrigPolynomial TrigPolynomial::sine(const AffineAngle& arg, const Rational& coeff) {
  return cosine(arg - AffineAngle(Rational(1, 2)), coeff);
}

void TrigPolynomial::add_term(const Rational& coeff, AffineAngle arg) {
  if (coeff == 0) return;
  if (arg.is_constant()) {
    Rational value;
    if (rational_cosine(arg.constant, value)) {
      constant_ += coeff * value;
      return;
    }
    Rational y = mod_two(arg.constant);
    if (y > 1) y = 2 - y;
    arg.constant = y;
  } else {
    const Rational& lead = arg.t != 0 ? arg.t : arg.u;
    if (lead < 0) arg = Rational(-1) * arg;
    arg.constant = mod_two(arg.constant);
  }
  Key k{arg.t, arg.u, arg.constant};
  auto [it, inserted] = terms_.try_emplace(k, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TrigPolynomial& TrigPolynomial::operator+=(const TrigPolynomial& y) {
  constant_ += y.constant_;
  for (const auto& [k, c] : y.terms_) add_term(c, AffineAngle(k.constant, k.t, k.u));
  return *this;
}

TrigPolynomial& TrigPolynomial::operator-=(const TrigPolynomial& y) { return *this += Rational(-1) * y; }

TrigPolynomial& TrigPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    constant_ = 0;
    return *this;
  }
  constant_ *= c;
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TrigPolynomial operator*(const TrigPolynomial& x, const TrigPolynomial& y) {
  TrigPolynomial r(x.constant_ * y.constant_);
  for (const auto& [k, c] : y.terms_) r.add_term(x.constant_ * c, AffineAngle(k.constant, k.t, k.u));
  for (const auto& [k, c] : x.terms_) r.add_term(y.constant_ * c, AffineAngle(k.constant, k.t, k.u));
  for (const auto& [kx, cx] : x.terms_) {
    AffineAngle a(kx.constant, kx.t, kx.u);
    for (const auto& [ky, cy] : y.terms_) {
      AffineAngle b(ky.constant, ky.t, ky.u);
      Rational half = cx * cy / 2;
      r.add_term(half, a + b);
      r.add_term(half, a - b);
    }
  }
  return r;
}

TrigPolynomial TrigPolynomial::derivative_t() const {
  TrigPolynomial r;
  for (const auto& [k, c] : terms_)
    if (k.t != 0) r.add_term(c * k.t, AffineAngle(k.constant + Rational(1, 2), k.t, k.u));
  return r;
}

TrigPolynomial TrigPolynomial::derivative_u() const {
  TrigPolynomial r;
  for (const auto& [k, c] : terms_)
    if (k.u != 0) r.add_term(c * k.u, AffineAngle(k.constant + Rational(1, 2), k.t, k.u));
  return r;
}

bool TrigPolynomial::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.t == 0 && kv.first.u == 0; });
}

Rational TrigPolynomial::constant_term() const { return constant_; }

std::vector<std::pair<Rational, AffineAngle>> TrigPolynomial::terms() const {
  std::vector<std::pair<Rational, AffineAngle>> out;
  for (const auto& [k, c] : terms_) out.emplace_back(c, AffineAngle(k.constant, k.t, k.u));
  return out;
}

CyclotomicNumber TrigPolynomial::at(const Rational& tau, const Rational& upsilon) const {
  std::vector<std::pair<Rational, RationalAngle>> cs;
  cs.reserve(terms_.size());
  for (const auto& [k, c] : terms_) cs.emplace_back(c, RationalAngle(k.constant + k.t * tau + k.u * upsilon));
  return CyclotomicNumber::cosine_sum(cs, constant_);
}

int TrigPolynomial::sign_at(const Rational& tau, const Rational& upsilon) const { return sign(at(tau, upsilon)); }

bool TrigPolynomial::is_identically_zero() const {
  std::map<std::pair<Rational, Rational>, std::vector<std::pair<Rational, RationalAngle>>> groups;
  for (const auto& [k, c] : terms_) {
    auto key = std::make_pair(k.t, k.u);
    groups[key].emplace_back(c, RationalAngle(k.constant));
  }
  auto fixed = groups.find({Rational(0), Rational(0)});
  if (fixed != groups.end()) {
    if (!CyclotomicNumber::cosine_sum(fixed->second, constant_).is_zero()) return false;
    groups.erase(fixed);
  } else if (constant_ != 0) {
    return false;
  }
  for (const auto& [freq, amps] : groups)
    if (!CyclotomicNumber::exponential_sum(amps).is_zero()) return false;
  return true;
}

std::vector<Rational> TrigPolynomial::t_frequencies() const {
  std::set<Rational> s{Rational(0)};
  for (const auto& [k, c] : terms_) {
    s.insert(k.t);
    s.insert(-k.t);
  }
  return {s.begin(), s.end()};
}

std::vector<Rational> TrigPolynomial::u_frequencies() const {
  std::set<Rational> s{Rational(0)};
  for (const auto& [k, c] : terms_) {
    s.insert(k.u);
    s.insert(-k.u);
  }
  return {s.begin(), s.end()};
}

SignedInterval TrigPolynomial::enclose(const ParameterBox& box, int bits) const {
  SignedInterval sum{constant_, constant_, bits};
  for (const auto& [k, c] : terms_) {
    Rational lo = k.constant, hi = k.constant;
    range_of(k.t, box.t_lo, box.t_hi, lo, hi);
    range_of(k.u, box.u_lo, box.u_hi, lo, hi);
    sum = sum + c * enclose_cos_pi_range(lo, hi, bits);
  }
  return sum;
}

std::string TrigPolynomial::str() const {
  std::ostringstream out;
  out << constant_;
  for (const auto& [k, c] : terms_) out << " + (" << c << ")*cos(pi*(" << AffineAngle(k.constant, k.t, k.u).str() << "))";
  return out.str();
}

}  // namespace rattet
