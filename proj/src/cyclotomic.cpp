#include "rattet/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rattet {

namespace {

using Poly = std::vector<std::int64_t>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic table overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic table overflow");
  return r;
}

int moebius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

Poly build_cyclotomic(std::int64_t n) {
  Poly p{1};
  std::vector<std::int64_t> divide_by;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = moebius(n / d);
    if (mu == 1) {
      // p *= x^d - 1
      Poly q(p.size() + d, 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i + d] = checked_add(q[i + d], p[i]);
        q[i] = checked_add(q[i], -p[i]);
      }
      p = std::move(q);
    } else if (mu == -1) {
      divide_by.push_back(d);
    }
  }
  for (std::int64_t d : divide_by) {
    // exact division by x^d - 1
    std::int64_t deg = static_cast<std::int64_t>(p.size()) - 1;
    Poly q(deg - d + 1, 0);
    for (std::int64_t i = deg; i >= d; --i) {
      std::int64_t c = p[i];
      q[i - d] = c;
      p[i - d] = checked_add(p[i - d], c);
      p[i] = 0;
    }
    for (std::int64_t i = 0; i < d; ++i)
      if (p[i] != 0) throw std::logic_error("cyclotomic polynomial: inexact division");
    p = std::move(q);
  }
  return p;
}

// x^k mod Phi_N for k = 0..N-1, flattened row-major with phi(N) columns.
struct PowerTable {
  std::int64_t order;
  std::int64_t phi;
  Poly phi_poly;
  std::vector<std::int64_t> rows;

  const std::int64_t* row(std::int64_t k) const { return rows.data() + k * phi; }
};

std::unique_ptr<PowerTable> build_table(std::int64_t n) {
  auto t = std::make_unique<PowerTable>();
  t->order = n;
  t->phi_poly = build_cyclotomic(n);
  t->phi = static_cast<std::int64_t>(t->phi_poly.size()) - 1;
  const std::int64_t phi = t->phi;
  t->rows.assign(n * phi, 0);
  std::vector<std::int64_t> cur(phi, 0);
  cur[0] = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    std::copy(cur.begin(), cur.end(), t->rows.begin() + k * phi);
    // multiply by x and reduce with the monic Phi_N
    std::int64_t top = cur[phi - 1];
    for (std::int64_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::int64_t i = 0; i < phi; ++i) cur[i] = checked_add(cur[i], -checked_mul(top, t->phi_poly[i]));
  }
  return t;
}

const PowerTable& table_for(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::unique_ptr<PowerTable>> cache;
  if (n < 1 || n > CyclotomicNumber::kMaxOrder)
    throw std::overflow_error("cyclotomic order " + std::to_string(n) + " exceeds the supported cap of " +
                              std::to_string(CyclotomicNumber::kMaxOrder));
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = build_table(n);
  return *slot;
}

// acc += c * x^k (mod Phi_N)
void add_power(std::vector<Rational>& acc, const PowerTable& t, std::int64_t k, const Rational& c) {
  k %= t.order;
  if (k < 0) k += t.order;
  if (k < t.phi) {
    acc[k] += c;
    return;
  }
  const std::int64_t* r = t.row(k);
  for (std::int64_t i = 0; i < t.phi; ++i)
    if (r[i] != 0) acc[i] += c * r[i];
}

// exp(i*pi*x) = sign * zeta_order^exponent
struct RootIndex {
  std::int64_t order;
  std::int64_t exponent;
  int sign;
};

RootIndex root_index(const RationalAngle& x) {
  std::int64_t n = x.num(), d = x.den();
  if (d % 2 == 0) {
    std::int64_t m = 2 * d;
    return {m, ((n % m) + m) % m, 1};
  }
  std::int64_t k = ((n % (2 * d)) + 2 * d) % (2 * d);
  if (k % 2 == 0) return {d, k / 2, 1};
  return {d, ((k + d) / 2) % d, -1};
}

std::int64_t common_order(std::int64_t a, std::int64_t b) {
  std::int64_t l = normalized_order(std::lcm(a, b));
  if (l > CyclotomicNumber::kMaxOrder)
    throw std::overflow_error("cyclotomic order " + std::to_string(l) + " exceeds the supported cap of " +
                              std::to_string(CyclotomicNumber::kMaxOrder));
  return l;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

std::int64_t normalized_order(std::int64_t n) { return n % 4 == 2 ? n / 2 : n; }

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) { return table_for(n).phi_poly; }

CyclotomicNumber::CyclotomicNumber() : order_(1), coeffs_(1) {}

CyclotomicNumber::CyclotomicNumber(const Rational& r) : order_(1), coeffs_{r} {}

CyclotomicNumber::CyclotomicNumber(std::int64_t order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  shrink_if_rational();
}

void CyclotomicNumber::shrink_if_rational() {
  if (order_ == 1) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return;
  Rational c = coeffs_[0];
  order_ = 1;
  coeffs_.assign(1, c);
}

CyclotomicNumber CyclotomicNumber::root_of_unity(std::int64_t j, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("root_of_unity: order must be positive");
  j %= n;
  if (j < 0) j += n;
  std::int64_t g = std::gcd(j, n);
  j /= g;
  n /= g;
  if (n % 4 == 2) {
    // zeta_n = -zeta_{n/2}^{(n/2+1)/2}
    std::int64_t m = n / 2;
    const auto& t = table_for(m);
    std::vector<Rational> acc(t.phi);
    add_power(acc, t, j * ((m + 1) / 2), j % 2 ? Rational(-1) : Rational(1));
    return {m, std::move(acc)};
  }
  const auto& t = table_for(n);
  std::vector<Rational> acc(t.phi);
  add_power(acc, t, j, 1);
  return {n, std::move(acc)};
}

CyclotomicNumber CyclotomicNumber::exp_i_pi(const RationalAngle& x) {
  std::pair<Rational, RationalAngle> term{1, x};
  return exponential_sum({&term, 1});
}

CyclotomicNumber CyclotomicNumber::cosine(const RationalAngle& x) {
  std::pair<Rational, RationalAngle> term{1, x};
  return cosine_sum({&term, 1});
}

CyclotomicNumber CyclotomicNumber::exponential_sum(std::span<const std::pair<Rational, RationalAngle>> terms) {
  std::int64_t n = 1;
  for (const auto& [c, a] : terms) n = common_order(n, root_index(a).order);
  const auto& t = table_for(n);
  std::vector<Rational> acc(t.phi);
  for (const auto& [c, a] : terms) {
    RootIndex ri = root_index(a);
    add_power(acc, t, ri.exponent * (n / ri.order), ri.sign > 0 ? c : Rational(-c));
  }
  return {n, std::move(acc)};
}

CyclotomicNumber CyclotomicNumber::cosine_sum(std::span<const std::pair<Rational, RationalAngle>> terms,
                                              const Rational& constant) {
  std::int64_t n = 1;
  for (const auto& [c, a] : terms) n = common_order(n, root_index(a).order);
  const auto& t = table_for(n);
  std::vector<Rational> acc(t.phi);
  acc[0] += constant;
  for (const auto& [c, a] : terms) {
    if (c == 0) continue;
    RootIndex ri = root_index(a);
    Rational half = ri.sign > 0 ? Rational(c / 2) : Rational(-c / 2);
    std::int64_t k = ri.exponent * (n / ri.order);
    add_power(acc, t, k, half);
    add_power(acc, t, -k, half);
  }
  return {n, std::move(acc)};
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const { return order_ == 1; }

Rational CyclotomicNumber::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
  if (order_ == 1) return *this;
  const auto& t = table_for(order_);
  std::vector<Rational> acc(t.phi);
  for (std::int64_t j = 0; j < t.phi; ++j)
    if (coeffs_[j] != 0) add_power(acc, t, -j, coeffs_[j]);
  return {order_, std::move(acc)};
}

bool CyclotomicNumber::is_real() const { return *this == conjugate(); }

CyclotomicNumber CyclotomicNumber::embed(std::int64_t m) const {
  m = normalized_order(m);
  if (m == order_) return *this;
  if (m % order_ != 0) throw std::invalid_argument("embed: target order is not a multiple");
  const auto& t = table_for(m);
  std::vector<Rational> acc(t.phi);
  std::int64_t step = m / order_;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) add_power(acc, t, static_cast<std::int64_t>(j) * step, coeffs_[j]);
  CyclotomicNumber r;
  r.order_ = m;
  r.coeffs_ = std::move(acc);
  return r;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& y) {
  if (y.order_ == 1) {
    coeffs_[0] += y.coeffs_[0];
    return *this;
  }
  std::int64_t n = common_order(order_, y.order_);
  CyclotomicNumber a = embed(n);
  const CyclotomicNumber b = y.embed(n);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  a.shrink_if_rational();
  return *this = std::move(a);
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& y) { return *this += -y; }

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  shrink_if_rational();
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& y) { return *this = *this * y; }

CyclotomicNumber operator*(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  if (x.order_ == 1) return x.coeffs_[0] * y;
  if (y.order_ == 1) return y.coeffs_[0] * x;
  std::int64_t n = common_order(x.order_, y.order_);
  const CyclotomicNumber a = x.embed(n), b = y.embed(n);
  const auto& t = table_for(n);
  std::vector<Rational> raw(2 * t.phi - 1);
  for (std::int64_t i = 0; i < t.phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::int64_t j = 0; j < t.phi; ++j)
      if (b.coeffs_[j] != 0) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  std::vector<Rational> acc(raw.begin(), raw.begin() + t.phi);
  for (std::int64_t k = t.phi; k < 2 * t.phi - 1; ++k)
    if (raw[k] != 0) add_power(acc, t, k, raw[k]);
  return {n, std::move(acc)};
}

bool operator==(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  if (x.order_ == y.order_) return x.coeffs_ == y.coeffs_;
  // a rational element is always stored at order 1
  if (x.order_ == 1 || y.order_ == 1) return false;
  std::int64_t n = common_order(x.order_, y.order_);
  return x.embed(n).coeffs_ == y.embed(n).coeffs_;
}

CyclotomicNumber cos_as_cyclotomic(const RationalAngle& a) { return CyclotomicNumber::cosine(a); }

SignedInterval float_eval(const CyclotomicNumber& x, int bits) {
  if (bits < 53) throw std::invalid_argument("float_eval: at least 53 bits required");
  SignedInterval sum{0, 0, bits};
  const auto& c = x.coeffs();
  const std::int64_t n = x.order();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    sum = sum + c[j] * enclose_cos_pi(make_rational(2 * static_cast<long>(j), n), bits + 8);
  }
  sum.precision = bits;
  return sum;
}

int sign(const CyclotomicNumber& x) {
  if (x.is_rational()) return sgn(x.to_rational());
  if (!x.is_real()) throw std::domain_error("sign: element is not real");
  if (x.is_zero()) return 0;
  for (int bits = 64;; bits *= 2) {
    int s = float_eval(x, bits).certain_sign();
    if (s != 0) return s;
  }
}

double to_double(const CyclotomicNumber& x) { return float_eval(x, 64).midpoint().get_d(); }

}  // namespace rattet
