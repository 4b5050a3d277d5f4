#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "rattet/lambert.hpp"

using namespace rattet;

namespace {

const LambertCube kL1({3, 4}, {2, 3}, {2, 3});
const LambertCube kL2({4, 5}, {2, 3}, {3, 5});

RationalAngle random_obtuse(std::mt19937_64& rng) {
  static constexpr std::int64_t dens[] = {3, 4, 5, 6, 7, 9, 10, 12, 14, 15, 18, 20, 21, 30, 35, 36, 42, 45, 60, 63};
  for (;;) {
    auto d = dens[std::uniform_int_distribution<std::size_t>(0, std::size(dens) - 1)(rng)];
    auto n = std::uniform_int_distribution<std::int64_t>(d / 2 + 1, d - 1)(rng);
    RationalAngle a(n, d);
    if (a.strictly_between({1, 2}, {1, 1})) return a;
  }
}

}  // namespace

TEST_CASE("essential angles must lie strictly between pi/2 and pi") {
  CHECK_THROWS_AS(LambertCube({1, 2}, {2, 3}, {2, 3}), std::domain_error);
  CHECK_THROWS_AS(LambertCube({1, 1}, {2, 3}, {2, 3}), std::domain_error);
  CHECK_THROWS_AS(LambertCube({1, 3}, {2, 3}, {2, 3}), std::domain_error);
  CHECK_NOTHROW(LambertCube({3, 5}, {3, 5}, {3, 5}));
  CHECK(LambertCube({2, 3}, {3, 4}, {2, 3}).sorted() == kL1);
}

TEST_CASE("residual examples") {
  CHECK(lambert_residual(kL1.a(), kL1.b(), kL1.c()).is_zero());
  CHECK(lambert_residual(kL2.a(), kL2.b(), kL2.c()).is_zero());
  auto r = lambert_residual({1, 2}, {1, 2}, {1, 2});
  REQUIRE(r.is_rational());
  CHECK(r.to_rational() == -1);
  for (const auto& c : {kL1, kL2}) {
    oracle::Wide s = 0;
    for (const auto* x : {&c.a(), &c.b(), &c.c()}) s += oracle::cos_pi(*x) * oracle::cos_pi(*x);
    CHECK(abs(s - 1) < oracle::Wide("1e-90"));
  }
}

TEST_CASE("volumes of the two cubes") {
  CHECK(lambert_volume(kL1).value == Rational(31, 576));
  CHECK(lambert_volume(kL2).value == Rational(17, 360));
  CHECK_THROWS_AS(lambert_volume(LambertCube({2, 3}, {2, 3}, {2, 3})), ContractError);
}

TEST_CASE("the double-angle reduction holds identically") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    auto a = random_obtuse(rng), b = random_obtuse(rng), c = random_obtuse(rng);
    CAPTURE(a.str() + " " + b.str() + " " + c.str());
    auto lhs = CyclotomicNumber(2) * lambert_residual(a, b, c);
    auto rhs = CyclotomicNumber::cosine(a.scaled(2, 1)) + CyclotomicNumber::cosine(b.scaled(2, 1)) +
               CyclotomicNumber::cosine(c.scaled(2, 1)) + CyclotomicNumber(1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("the search finds exactly two cubes and no parametric family") {
  LambertSearchConfig cfg;
  auto rep = search_lambert(cfg);
  CHECK(rep.candidate_count > 0);
  CHECK(rep.prefilter_pass >= rep.cubes.size());
  CHECK(rep.cubes == std::vector<LambertCube>{kL1, kL2});
  REQUIRE(rep.volumes.size() == 2);
  CHECK(rep.volumes[0].value == Rational(31, 576));
  CHECK(rep.volumes[1].value == Rational(17, 360));
  CHECK(rep.pair_pattern_excluded);
  CHECK(rep.triple_pattern_excluded);
  CHECK(rep.no_family());
  for (const auto& c : rep.cubes) {
    CHECK(c == c.sorted());
    CHECK(all_angles_rational(c));
    for (const auto* x : {&c.a(), &c.b(), &c.c()}) CHECK(x->strictly_between({1, 2}, {1, 1}));
  }
  cfg.workers = 4;
  CHECK(search_lambert(cfg).cubes == rep.cubes);
  CHECK(search_rational_lambert_cubes() == rep.cubes);
}

TEST_CASE("a dense denominator cap finds the same cubes") {
  LambertSearchConfig cfg;
  cfg.max_den = 30;
  auto rep = search_lambert(cfg);
  CHECK(rep.cubes == std::vector<LambertCube>{kL1, kL2});
}

TEST_CASE("companion tetrahedra share the cube volumes") {
  auto ts = companion_tetrahedra();
  REQUIRE(ts.size() == 2);
  CHECK(ts[0].quadruple == PythagoreanQuadruple({1, 2}, {1, 2}, {1, 2}, {31, 144}));
  CHECK(ts[1].quadruple == PythagoreanQuadruple({1, 2}, {1, 2}, {1, 2}, {17, 90}));
  CHECK(ts[0].volume == lambert_volume(kL1));
  CHECK(ts[1].volume == lambert_volume(kL2));
  CHECK(ts[0].k == Rational(144, 31));
  CHECK(ts[1].k == Rational(90, 17));
  for (const auto& t : ts) {
    CHECK(!t.residual_vanishes);
    CHECK(t.route == "coxeter-product");
    CHECK(t.volume.value == 1 / (4 * t.k));
    CHECK(all_angles_rational(t.quadruple));
  }
}
