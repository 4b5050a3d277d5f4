#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "rattet/cyclotomic.hpp"
#include "rattet/trig_polynomial.hpp"

using namespace rattet;

namespace {

CyclotomicNumber cosq(std::int64_t n, std::int64_t d) { return cos_as_cyclotomic(RationalAngle(n, d)); }
CyclotomicNumber q(long n, long d = 1) { return CyclotomicNumber(make_rational(n, d)); }

}  // namespace

TEST_CASE("rational angles are stored reduced with the sign in the numerator") {
  RationalAngle a(6, -8);
  CHECK(a.num() == -3);
  CHECK(a.den() == 4);
  CHECK(RationalAngle(0, 7) == RationalAngle(0, 1));
  CHECK(RationalAngle(0, 7).den() == 1);
  CHECK(RationalAngle(1, 3) + RationalAngle(1, 6) == RationalAngle(1, 2));
  CHECK(RationalAngle(7, 5).cosine_representative() == RationalAngle(3, 5));
  CHECK(RationalAngle(-1, 5).cosine_representative() == RationalAngle(1, 5));
  CHECK(RationalAngle(2, 1).folded_denominator() == 0);
  CHECK(RationalAngle::parse("-4/6") == RationalAngle(-2, 3));
  CHECK_THROWS(RationalAngle(1, 0));
  CHECK_THROWS(RationalAngle::parse("1/x"));
}

TEST_CASE("cos(pi/3) is the rational 1/2 at order 1") {
  auto c = cosq(1, 3);
  CHECK(c.order() == 1);
  CHECK(c.to_rational() == Rational(1, 2));
}

TEST_CASE("cos(pi/5) is the golden-ratio cosine") {
  auto c = cosq(1, 5);
  CHECK(c.order() == 5);
  CHECK(!c.is_rational());
  // 4x^2 - 2x - 1 = 0
  CHECK((q(4) * c * c - q(2) * c - q(1)).is_zero());
  CHECK(std::abs(to_double(c) - 0.8090169943749474) < 1e-15);
  auto phi_half = (oracle::Wide(1) + boost::multiprecision::sqrt(oracle::Wide(5))) / 4;
  auto iv = float_eval(c, 128);
  CHECK(oracle::from_q(iv.lo) <= phi_half);
  CHECK(phi_half <= oracle::from_q(iv.hi));
}

TEST_CASE("cos(pi/2) is zero") { CHECK(cosq(1, 2).is_zero()); }

TEST_CASE("vanishing cosine sums from the classification") {
  CHECK((cosq(1, 5) - cosq(2, 5) - cosq(1, 3)).is_zero());
  CHECK((cosq(1, 7) - cosq(2, 7) + cosq(3, 7) - cosq(1, 3)).is_zero());
  CHECK((cosq(1, 7) + cosq(3, 7) - cosq(1, 21) + cosq(8, 21) - q(1, 2)).is_zero());
  CHECK(!(cosq(1, 7) + cosq(3, 7) - cosq(1, 21) + cosq(8, 21)).is_zero());
}

TEST_CASE("sign") {
  CHECK(sign(CyclotomicNumber()) == 0);
  CHECK(sign(cosq(1, 5)) == 1);
  CHECK(sign(cosq(1, 5) - cosq(2, 5) - q(1, 2)) == 0);
  CHECK(sign(cosq(4, 7)) == -1);
  CHECK(sign(cosq(1, 7) - cosq(1, 7) + q(1, 1000000)) == 1);
  CHECK_THROWS_AS(sign(CyclotomicNumber::root_of_unity(1, 5)), std::domain_error);
}

TEST_CASE("float_eval") {
  auto half = float_eval(q(1, 2), 64);
  CHECK(half.lo == Rational(1, 2));
  CHECK(half.hi == Rational(1, 2));

  auto r = float_eval(cosq(1, 4), 64);
  oracle::Wide s = boost::multiprecision::sqrt(oracle::Wide(1) / 2);
  CHECK(oracle::from_q(r.lo) <= s);
  CHECK(s <= oracle::from_q(r.hi));
  CHECK(r.width() < Rational(1, mpz_class(1) << 60));

  auto c13 = float_eval(cosq(13, 18), 64);
  CHECK(c13.hi < Rational(-64, 100));
  CHECK(oracle::cos_pi(13, 18) < -0.64);

  auto w64 = float_eval(cosq(3, 11), 64).width();
  auto w128 = float_eval(cosq(3, 11), 128).width();
  auto w256 = float_eval(cosq(3, 11), 256).width();
  CHECK(w128 <= w64);
  CHECK(w256 <= w128);
  CHECK_THROWS(float_eval(q(1), 52));
}

TEST_CASE("float_eval of random cosines matches an independent high-precision cosine") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 120);
    std::int64_t num = static_cast<std::int64_t>(rng() % (4 * den)) - 2 * den;
    auto iv = float_eval(cos_as_cyclotomic(RationalAngle(num, den)), 128);
    auto diff = abs(oracle::from_q(iv.midpoint()) - oracle::cos_pi(num, den));
    REQUIRE(diff < oracle::Wide("1e-30"));
  }
}

TEST_CASE("field laws hold exactly on random elements") {
  std::mt19937_64 rng(5);
  auto random_element = [&]() {
    CyclotomicNumber x(make_rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4)));
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < terms; ++i) {
      static const std::int64_t dens[] = {3, 4, 5, 7, 9, 12, 15};
      std::int64_t d = dens[rng() % 7];
      x += Rational(static_cast<long>(rng() % 5) - 2) * cosq(static_cast<std::int64_t>(rng() % (2 * d)), d);
    }
    return x;
  };
  for (int i = 0; i < 100; ++i) {
    auto a = random_element(), b = random_element(), c = random_element();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("mixed orders embed into the common order") {
  auto x = cosq(1, 5) + cosq(1, 7);
  CHECK(x.order() == 35);
  CHECK(x - cosq(1, 7) == cosq(1, 5));
  CHECK(CyclotomicNumber::root_of_unity(1, 6) == -CyclotomicNumber::root_of_unity(2, 3));
}

TEST_CASE("orders beyond the cap fail loudly") {
  CHECK_THROWS_AS(cosq(1, 1300), std::overflow_error);
  CHECK_NOTHROW(cosq(1, 1260));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(5) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(euler_phi(2520) == 576);
  CHECK(static_cast<std::int64_t>(cyclotomic_polynomial(2520).size()) == 577);
}

TEST_CASE("interval enclosures of cosines contain the reference value") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 60);
    std::int64_t num = static_cast<std::int64_t>(rng() % (6 * den)) - 3 * den;
    auto iv = enclose_cos_pi(make_rational(static_cast<long>(num), static_cast<long>(den)), 80);
    auto ref = oracle::cos_pi(num, den);
    oracle::Wide slack("1e-90");
    REQUIRE(oracle::from_q(iv.lo) <= ref + slack);
    REQUIRE(ref - slack <= oracle::from_q(iv.hi));
  }
  auto whole = enclose_cos_pi_range(Rational(-1, 10), Rational(1, 10), 64);
  CHECK(whole.hi == 1);
  auto across = enclose_cos_pi_range(Rational(9, 10), Rational(11, 10), 64);
  CHECK(across.lo == -1);
  auto ac = interval_acos_over_pi(SignedInterval::point(Rational(0)), 64);
  CHECK(ac.contains(Rational(1, 2)));
}

TEST_CASE("trigonometric polynomials") {
  AffineAngle t(0, 1);
  auto c = TrigPolynomial::cosine(t);
  // cos^2 t = (1 + cos 2t)/2
  auto sq = c * c;
  auto expected = TrigPolynomial(Rational(1, 2)) + TrigPolynomial::cosine(AffineAngle(0, 2), Rational(1, 2));
  CHECK((sq - expected).is_identically_zero());
  // item 2: -cos t + cos(t + pi/3) + cos(t - pi/3) = 0
  auto item2 = TrigPolynomial::cosine(t, -1) + TrigPolynomial::cosine(AffineAngle(Rational(1, 3), 1)) +
               TrigPolynomial::cosine(AffineAngle(Rational(-1, 3), 1));
  CHECK(item2.is_identically_zero());
  CHECK(!TrigPolynomial::cosine(t).is_identically_zero());
  // sin^2 + cos^2 = 1
  auto s = TrigPolynomial::sine(AffineAngle(Rational(1, 7), 1, 1));
  auto cc = TrigPolynomial::cosine(AffineAngle(Rational(1, 7), 1, 1));
  CHECK((s * s + cc * cc - TrigPolynomial(1)).is_identically_zero());
  // derivative of cos(pi t) over pi is -sin(pi t)
  CHECK((c.derivative_t() + TrigPolynomial::sine(t)).is_identically_zero());
  CHECK(c.at(Rational(1, 3)).to_rational() == Rational(1, 2));
  auto box = c.enclose({Rational(0), Rational(1, 3)}, 64);
  CHECK(box.lo <= Rational(1, 2));
  CHECK(box.hi == 1);
}
