#include "rattet/lambert.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rattet/search.hpp"
#include "rattet/trig_polynomial.hpp"

namespace rattet {

namespace {

// Functions rather than globals: other translation units construct cubes during static init.
RationalAngle half_pi() { return {1, 2}; }
RationalAngle full_pi() { return {1, 1}; }

// y = 2pi - 2a lies in (0, pi) exactly when a lies in (pi/2, pi), and cos y = cos 2a.
RationalAngle unfold(const RationalAngle& y) { return full_pi() - y.scaled(1, 2); }

std::vector<std::int64_t> denominators(const LambertSearchConfig& cfg) {
  std::vector<std::int64_t> dens;
  if (cfg.max_den > 0) {
    for (std::int64_t d = 2; d <= cfg.max_den; ++d) dens.push_back(d);
    return dens;
  }
  for (const auto* l : {&kListL0, &kListL1, &kListL2, &kListL3})
    for (auto d : *l)
      if (d > 1 && std::find(dens.begin(), dens.end(), d) == dens.end()) dens.push_back(d);
  std::sort(dens.begin(), dens.end());
  return dens;
}

}  // namespace

LambertCube::LambertCube(RationalAngle a, RationalAngle b, RationalAngle c) : a_(a), b_(b), c_(c) {
  for (const auto* x : {&a_, &b_, &c_})
    if (!x->strictly_between(half_pi(), full_pi()))
      throw std::domain_error("LambertCube: essential angle " + x->str() + " outside (pi/2, pi)");
}

LambertCube LambertCube::sorted() const {
  std::array<RationalAngle, 3> v{a_, b_, c_};
  std::sort(v.begin(), v.end(), std::greater<>());
  return {v[0], v[1], v[2]};
}

std::string LambertCube::str() const { return "L(" + a_.str() + ", " + b_.str() + ", " + c_.str() + ")"; }

CyclotomicNumber lambert_residual(const RationalAngle& a, const RationalAngle& b, const RationalAngle& c) {
  auto ca = CyclotomicNumber::cosine(a), cb = CyclotomicNumber::cosine(b), cc = CyclotomicNumber::cosine(c);
  return ca * ca + cb * cb + cc * cc - CyclotomicNumber(1);
}

VolumeCoefficient lambert_volume(const LambertCube& cube) {
  if (!lambert_residual(cube.a(), cube.b(), cube.c()).is_zero())
    throw ContractError("lambert_volume: " + cube.str() + " violates cos^2 a + cos^2 b + cos^2 c = 1");
  Rational v = Rational(1, 2);
  for (const auto* x : {&cube.a(), &cube.b(), &cube.c()}) {
    Rational d = 1 - x->fraction();
    v -= d * d;
  }
  v /= 4;
  if (v <= 0) throw ContractError("lambert_volume: nonpositive volume for " + cube.str());
  return {v};
}

LambertSearchReport search_lambert(const LambertSearchConfig& cfg) {
  // cos^2 x = (1 + cos 2x)/2 turns the relation into cos y1 + cos y2 + cos y3 + cos 0 = 0,
  // which is a raw quadruple with the zero angle in the b slot.
  std::vector<RationalAngle> ys;
  for (auto d : denominators(cfg))
    for (std::int64_t n = 1; n < d; ++n)
      if (std::gcd(n, d) == 1) ys.emplace_back(n, d);
  std::sort(ys.begin(), ys.end());

  std::vector<RawQuadruple> cands;
  const RationalAngle zero(0, 1);
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k <= j; ++k) cands.push_back({ys[i], zero, ys[j], ys[k]});

  LambertSearchReport rep;
  rep.candidate_count = cands.size();
  auto scan = scan_candidates(cands, cfg.tolerance, cfg.workers > 1 ? Kernel::kParallel : Kernel::kSerial,
                              std::max(1, cfg.workers));
  rep.prefilter_pass = scan.prefilter_pass;
  std::set<LambertCube> found;
  for (auto i : scan.exact_zero) {
    const auto& x = cands[i];
    LambertCube cube(unfold(x.a), unfold(x.c), unfold(x.d));
    if (!lambert_residual(cube.a(), cube.b(), cube.c()).is_zero())
      throw std::logic_error("search_lambert: reduction identity failed at " + cube.str());
    found.insert(cube.sorted());
  }
  rep.cubes.assign(found.begin(), found.end());
  for (const auto& c : rep.cubes) rep.volumes.push_back(lambert_volume(c));

  // A two-term pattern cos y + cos(pi - y) = 0 forces the remaining cosine to be -1,
  // i.e. y = pi and a = pi/2, which the open window excludes.
  {
    Rational value;
    bool forced = rational_cosine(Rational(1), value) && value == -1;
    rep.pair_pattern_excluded = forced && !unfold(full_pi()).strictly_between(half_pi(), full_pi());
  }
  // The parametric three-term vanishing sum cos(pi - t) + cos(t + pi/3) + cos(t - pi/3) = 0
  // uses up all three cosines and leaves the constant 1 behind.
  {
    auto p = TrigPolynomial::cosine(AffineAngle(1, -1)) + TrigPolynomial::cosine(AffineAngle(Rational(1, 3), 1)) +
             TrigPolynomial::cosine(AffineAngle(Rational(-1, 3), 1));
    auto with_target = p + TrigPolynomial::cosine(AffineAngle(0));
    rep.triple_pattern_excluded = p.is_identically_zero() && !with_target.is_identically_zero() &&
                                  (with_target - TrigPolynomial(Rational(1))).is_identically_zero();
  }
  return rep;
}

std::vector<LambertCube> search_rational_lambert_cubes() { return search_lambert({}).cubes; }

std::vector<CompanionTetrahedron> companion_tetrahedra() {
  std::vector<CompanionTetrahedron> out;
  const std::array<std::pair<RationalAngle, LambertCube>, 2> pairs{{
      {RationalAngle(31, 144), LambertCube({3, 4}, {2, 3}, {2, 3})},
      {RationalAngle(17, 90), LambertCube({2, 3}, {3, 5}, {4, 5})},
  }};
  for (const auto& [s, cube] : pairs) {
    PythagoreanQuadruple x(half_pi(), half_pi(), half_pi(), s);
    CompanionTetrahedron t{x, {}, quadruple_residual(x).is_zero(), "", 1 / s.fraction()};
    if (t.residual_vanishes) {
      t.route = "closed-form";
      t.volume = volume(x);
    } else {
      // Five right dihedral angles and one angle pi/k: the product I2(k) x A1 x A1.
      t.route = "coxeter-product";
      t.volume = {1 / (4 * t.k)};
    }
    auto target = lambert_volume(cube);
    if (!(t.volume == target))
      throw ContractError("companion_tetrahedra: " + x.str() + " volume " + t.volume.value.get_str() +
                          " differs from " + cube.str() + " volume " + target.value.get_str());
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace rattet
