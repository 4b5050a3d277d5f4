#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rattet {

using Rational = mpq_class;

// n/d in canonical form (mpq_class(n, d) alone does not reduce).
inline Rational make_rational(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// The angle (num/den)*pi, kept as a reduced fraction with den >= 1.
class RationalAngle {
 public:
  RationalAngle() = default;
  RationalAngle(std::int64_t num, std::int64_t den);
  explicit RationalAngle(const Rational& multiple_of_pi);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  Rational fraction() const { return Rational(static_cast<long>(num_), static_cast<unsigned long>(den_)); }
  double radians() const;
  double turns_of_pi() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_zero() const { return num_ == 0; }

  // Angle in [0, 1]*pi with the same cosine.
  RationalAngle cosine_representative() const;
  // Reduced denominator of the cosine representative; 0 stands for the zero angle.
  std::int64_t folded_denominator() const;
  bool strictly_between(const RationalAngle& lo, const RationalAngle& hi) const;
  bool in_open_half_turn() const;

  std::string str() const;
  static RationalAngle parse(std::string_view text);

  RationalAngle operator-() const { return {-num_, den_}; }
  friend RationalAngle operator+(const RationalAngle& x, const RationalAngle& y);
  friend RationalAngle operator-(const RationalAngle& x, const RationalAngle& y);
  RationalAngle scaled(std::int64_t n, std::int64_t d) const;

  friend bool operator==(const RationalAngle& x, const RationalAngle& y) = default;
  friend std::strong_ordering operator<=>(const RationalAngle& x, const RationalAngle& y);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline RationalAngle pi_times(std::int64_t num, std::int64_t den = 1) { return {num, den}; }

std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

}  // namespace rattet

template <>
struct std::hash<rattet::RationalAngle> {
  std::size_t operator()(const rattet::RationalAngle& a) const noexcept {
    return std::hash<std::int64_t>{}(a.num()) * 1000003u ^ std::hash<std::int64_t>{}(a.den());
  }
};
