#include "rattet/rational_angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace rattet {

namespace {

using Wide = __int128;

RationalAngle from_wide(Wide num, Wide den) {
  if (den == 0) throw std::invalid_argument("RationalAngle: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr Wide lim = INT64_MAX;
  if (num > lim || num < -lim || den > lim) throw std::overflow_error("RationalAngle: 64-bit overflow");
  return RationalAngle(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

RationalAngle::RationalAngle(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("RationalAngle: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RationalAngle::RationalAngle(const Rational& multiple_of_pi) {
  Rational x = multiple_of_pi;
  x.canonicalize();
  if (!x.get_num().fits_slong_p() || !x.get_den().fits_slong_p())
    throw std::overflow_error("RationalAngle: fraction does not fit 64 bits");
  num_ = x.get_num().get_si();
  den_ = x.get_den().get_si();
}

double RationalAngle::radians() const { return std::numbers::pi * turns_of_pi(); }

RationalAngle RationalAngle::cosine_representative() const {
  std::int64_t period = 2 * den_;
  std::int64_t k = num_ % period;
  if (k < 0) k += period;
  if (k > den_) k = period - k;
  return {k, den_};
}

std::int64_t RationalAngle::folded_denominator() const {
  RationalAngle f = cosine_representative();
  return f.is_zero() ? 0 : f.den();
}

bool RationalAngle::strictly_between(const RationalAngle& lo, const RationalAngle& hi) const {
  return lo < *this && *this < hi;
}

bool RationalAngle::in_open_half_turn() const { return num_ > 0 && num_ < den_; }

std::string RationalAngle::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

RationalAngle RationalAngle::parse(std::string_view text) {
  auto slash = text.find('/');
  std::int64_t n = 0, d = 1;
  auto head = text.substr(0, slash);
  auto r = std::from_chars(head.data(), head.data() + head.size(), n);
  if (r.ec != std::errc{} || r.ptr != head.data() + head.size())
    throw std::invalid_argument("RationalAngle: cannot parse '" + std::string(text) + "'");
  if (slash != std::string_view::npos) {
    auto tail = text.substr(slash + 1);
    r = std::from_chars(tail.data(), tail.data() + tail.size(), d);
    if (r.ec != std::errc{} || r.ptr != tail.data() + tail.size() || d <= 0)
      throw std::invalid_argument("RationalAngle: cannot parse '" + std::string(text) + "'");
  }
  return {n, d};
}

RationalAngle operator+(const RationalAngle& x, const RationalAngle& y) {
  return from_wide(Wide(x.num_) * y.den_ + Wide(y.num_) * x.den_, Wide(x.den_) * y.den_);
}

RationalAngle operator-(const RationalAngle& x, const RationalAngle& y) { return x + (-y); }

RationalAngle RationalAngle::scaled(std::int64_t n, std::int64_t d) const {
  return from_wide(Wide(num_) * n, Wide(den_) * d);
}

std::strong_ordering operator<=>(const RationalAngle& x, const RationalAngle& y) {
  Wide l = Wide(x.num_) * y.den_;
  Wide r = Wide(y.num_) * x.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  Wide l = Wide(a / std::gcd(a, b)) * b;
  if (l > INT64_MAX || l < 0) throw std::overflow_error("lcm overflow");
  return static_cast<std::int64_t>(l);
}

}  // namespace rattet
