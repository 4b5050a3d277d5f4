#include "rattet/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rattet {

namespace {

CyclotomicNumber sine(const RationalAngle& x) { return CyclotomicNumber::cosine(RationalAngle(1, 2) - x); }

SignedInterval square(const SignedInterval& x) {
  if (x.contains_zero()) {
    Rational m = std::max(x.lo * x.lo, x.hi * x.hi);
    return {0, m, x.precision};
  }
  return x * x;
}

// sqrt(1 - c^2) for an enclosure of a cosine of an angle in [0, pi].
SignedInterval sine_from_cosine(const SignedInterval& c, int bits) {
  SignedInterval one = SignedInterval::point(1);
  SignedInterval s2 = one - square(c);
  s2.lo = std::max(s2.lo, Rational(0));
  s2.hi = std::min(s2.hi, Rational(1));
  return interval_sqrt(s2, bits);
}

bool overlaps(const SignedInterval& x, const SignedInterval& y) { return x.lo <= y.hi && y.lo <= x.hi; }

// Cosines of the sides opposite each angle (dual law of cosines).
std::array<SignedInterval, 3> side_cosines(const LinkTriangle& t, int bits) {
  std::array<SignedInterval, 3> out;
  for (int i = 0; i < 3; ++i) {
    const auto& a = t.angles[i];
    const auto& b = t.angles[(i + 1) % 3];
    const auto& c = t.angles[(i + 2) % 3];
    auto num = CyclotomicNumber::cosine(a) + CyclotomicNumber::cosine(b) * CyclotomicNumber::cosine(c);
    auto den = sine(b) * sine(c);
    out[i] = round_outward(float_eval(num, bits) / float_eval(den, bits), bits);
  }
  return out;
}

void require_triangle(const LinkTriangle& t) {
  const Rational one(1);
  Rational sum = 0;
  for (const auto& a : t.angles) {
    if (!a.strictly_between(RationalAngle(0, 1), RationalAngle(1, 1)))
      throw std::domain_error("LinkTriangle: angle " + a.str() + " outside (0, pi)");
    sum += a.fraction();
  }
  if (sum <= one) throw std::domain_error("LinkTriangle: angle sum of " + t.str() + " is not greater than pi");
  for (int i = 0; i < 3; ++i) {
    Rational others = sum - t.angles[i].fraction();
    if (others - t.angles[i].fraction() >= one)
      throw std::domain_error("LinkTriangle: " + t.str() + " violates the polar triangle inequality");
  }
}

DiameterCheck check_diameter_at(const LinkTriangle& t, const SpherePoint& center, const RationalAngle& radius,
                                int bits) {
  auto cos_sides = side_cosines(t, bits);
  const auto& cg = cos_sides[2];  // side AB, opposite the third angle
  const auto& cb = cos_sides[1];  // side AC
  auto sg = sine_from_cosine(cg, bits);
  auto sb = sine_from_cosine(cb, bits);
  auto ca = enclose_cos_pi(t.angles[0].fraction(), bits);
  auto sa = enclose_sin_pi(t.angles[0].fraction(), bits);

  auto ct = enclose_cos_pi(center.lon, bits), st = enclose_sin_pi(center.lon, bits);
  auto cf = enclose_cos_pi(center.lat, bits), sf = enclose_sin_pi(center.lat, bits);
  std::array<SignedInterval, 3> p{ct * cf, st * cf, sf};

  DiameterCheck out;
  out.bits = bits;
  out.dots[0] = round_outward(p[0], bits);
  out.dots[1] = round_outward(cg * p[0] + sg * p[1], bits);
  out.dots[2] = round_outward(cb * p[0] + sb * ca * p[1] + sb * sa * p[2], bits);
  out.cos_radius = enclose_cos_pi(radius.fraction(), bits);

  bool inside = true, outside = false;
  for (const auto& d : out.dots) {
    if (!(d.lo > out.cos_radius.hi)) inside = false;
    if (d.hi < out.cos_radius.lo) outside = true;
  }
  out.verdict = inside ? DiameterCheck::Verdict::kInside
                       : outside ? DiameterCheck::Verdict::kOutside : DiameterCheck::Verdict::kInconclusive;
  return out;
}

// Approximate centres worth trying: circumcentre, side midpoints and the normalized centroid,
// each rounded to a rational longitude and latitude.
std::vector<SpherePoint> candidate_centers(const LinkTriangle& t) {
  auto side = [&](int i) {
    double a = t.angles[i].radians(), b = t.angles[(i + 1) % 3].radians(), c = t.angles[(i + 2) % 3].radians();
    return std::acos(std::clamp((std::cos(a) + std::cos(b) * std::cos(c)) / (std::sin(b) * std::sin(c)), -1.0, 1.0));
  };
  double lb = side(1), lg = side(2), al = t.angles[0].radians();
  using V = std::array<double, 3>;
  V A{1, 0, 0}, B{std::cos(lg), std::sin(lg), 0},
      C{std::cos(lb), std::sin(lb) * std::cos(al), std::sin(lb) * std::sin(al)};
  auto add = [](V x, V y) { return V{x[0] + y[0], x[1] + y[1], x[2] + y[2]}; };
  auto sub = [](V x, V y) { return V{x[0] - y[0], x[1] - y[1], x[2] - y[2]}; };
  auto cross = [](V x, V y) {
    return V{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
  };
  std::vector<V> dirs;
  V n = cross(sub(B, A), sub(C, A));
  if (n[0] + n[1] + n[2] < 0) n = {-n[0], -n[1], -n[2]};
  dirs.push_back(n);
  dirs.push_back(add(A, B));
  dirs.push_back(add(A, C));
  dirs.push_back(add(B, C));
  dirs.push_back(add(add(A, B), C));
  std::vector<SpherePoint> out;
  for (auto d : dirs) {
    double norm = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    if (norm < 1e-12) continue;
    double lon = std::atan2(d[1], d[0]) / M_PI, lat = std::asin(std::clamp(d[2] / norm, -1.0, 1.0)) / M_PI;
    out.push_back({make_rational(std::lround(lon * 10000), 10000), make_rational(std::lround(lat * 10000), 10000)});
  }
  return out;
}

std::string infeasibility_reason(const Rational& target) {
  if (target.get_den() != 1) return "target " + target.get_str() + " is not an integer";
  if (target < 0) return "target " + target.get_str() + " is negative";
  return "no nonnegative solution below " + target.get_str();
}

}  // namespace

Rational CoxeterEntry::volume(const Rational& k, const Rational& l) const {
  if (parameters >= 1 && k <= 0) throw std::domain_error("CoxeterEntry: k must be positive");
  if (parameters == 2 && l <= 0) throw std::domain_error("CoxeterEntry: l must be positive");
  if (parameters == 2) return 1 / (2 * k * l);
  if (parameters == 1) return 1 / (4 * k);
  return tabulated;
}

Rational CoxeterEntry::derived_volume(const Rational& k, const Rational& l) const {
  // |I2(k)| = 2k, |A1| = 2
  Rational order = 1;
  for (int d : degrees) order *= d;
  if (parameters >= 1) {
    if (k <= 0) throw std::domain_error("CoxeterEntry: k must be positive");
    order *= 2 * k;
  }
  if (parameters == 2) {
    if (l <= 0) throw std::domain_error("CoxeterEntry: l must be positive");
    order *= 2 * l;
  }
  return 2 / order;
}

const std::vector<CoxeterEntry>& coxeter_catalog() {
  static const std::vector<CoxeterEntry> rows = [] {
    std::vector<CoxeterEntry> v{
        {1, "A4", {2, 3, 4, 5}, 0, Rational(1, 60)},
        {2, "B4", {2, 4, 6, 8}, 0, Rational(1, 192)},
        {3, "D4", {2, 4, 4, 6}, 0, Rational(1, 96)},
        {4, "H4", {2, 12, 20, 30}, 0, Rational(1, 7200)},
        {5, "F4", {2, 6, 8, 12}, 0, Rational(1, 576)},
        {6, "A3xA1", {2, 3, 4, 2}, 0, Rational(1, 24)},
        {7, "B3xA1", {2, 4, 6, 2}, 0, Rational(1, 48)},
        {8, "H3xA1", {2, 6, 10, 2}, 0, Rational(1, 120)},
        {9, "I2(k)xI2(l)", {}, 2, 0},
        {10, "I2(k)xA1xA1", {2, 2}, 1, 0},
        {11, "A1xA1xA1xA1", {2, 2, 2, 2}, 0, Rational(1, 8)},
    };
    for (const auto& e : v) {
      if (e.parameters == 0 && e.derived_volume() != e.tabulated)
        throw std::logic_error("coxeter_catalog: row " + std::to_string(e.index) + " volume mismatch");
      for (int k = 2; k <= 12; ++k)
        if (e.parameters > 0 && e.derived_volume(k, k + 1) != e.volume(k, k + 1))
          throw std::logic_error("coxeter_catalog: row " + std::to_string(e.index) + " formula mismatch");
    }
    return v;
  }();
  return rows;
}

Rational LinkTriangle::excess() const {
  return angles[0].fraction() + angles[1].fraction() + angles[2].fraction() - 1;
}

std::string LinkTriangle::str() const {
  return "(" + angles[0].str() + ", " + angles[1].str() + ", " + angles[2].str() + ")";
}

std::array<SignedInterval, 3> link_triangle_sides(const LinkTriangle& t, int bits) {
  require_triangle(t);
  auto cs = side_cosines(t, bits);
  std::array<SignedInterval, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = round_outward(interval_acos_over_pi(cs[i], bits), bits);
  return out;
}

std::array<LinkTriangle, 4> vertex_links(const PythagoreanQuadruple& x) {
  // Facet pairs: (1,2) r, (1,3) p, (1,4) q, (2,3) q, (2,4) p, (3,4) s.
  LinkTriangle with_s{{x.p(), x.q(), x.s()}};
  LinkTriangle with_r{{x.p(), x.q(), x.r()}};
  return {with_s, with_s, with_r, with_r};
}

DiameterCheck check_diameter(const LinkTriangle& t, const SpherePoint& center, const RationalAngle& radius) {
  require_triangle(t);
  DiameterCheck last;
  for (int bits = 64; bits <= 1024; bits *= 2) {
    last = check_diameter_at(t, center, radius, bits);
    if (last.verdict != DiameterCheck::Verdict::kInconclusive) break;
  }
  return last;
}

bool diameter_certificate(const LinkTriangle& t, const SpherePoint& center, const RationalAngle& radius) {
  auto c = check_diameter(t, center, radius);
  if (c.verdict == DiameterCheck::Verdict::kInconclusive)
    throw CertificationFailure("diameter_certificate: undecided at " + std::to_string(c.bits) + " bits for " +
                               t.str());
  return c.verdict == DiameterCheck::Verdict::kInside;
}

const AreaEquation& area_equation() {
  static const AreaEquation eq = [] {
    AreaEquation e;
    const int n[3] = {3, 4, 5};
    std::int64_t scale = 1;
    for (int i = 0; i < 3; ++i) {
      LinkTriangle t{{RationalAngle(1, 2), RationalAngle(1, 3), RationalAngle(1, n[i])}};
      e.excesses[i] = t.excess();
      scale = std::lcm(scale, static_cast<std::int64_t>(e.excesses[i].get_den().get_si()));
    }
    e.scale = Rational(static_cast<long>(scale));
    for (int i = 0; i < 3; ++i) {
      Rational c = e.scale * e.excesses[i];
      e.coefficients[i] = c.get_num().get_si();
    }
    if (e.coefficients != std::array<long, 3>{10, 5, 2})
      throw std::logic_error("area_equation: derived coefficients differ from 10, 5, 2");
    return e;
  }();
  return eq;
}

std::optional<std::array<long, 3>> area_diophantine(const Rational& target) {
  if (target.get_den() != 1 || target < 0) return std::nullopt;
  if (!target.get_num().fits_slong_p()) throw std::overflow_error("area_diophantine: target too large");
  const long t = target.get_num().get_si();
  const auto& c = area_equation().coefficients;
  for (long k = t / c[0]; k >= 0; --k)
    for (long l = (t - c[0] * k) / c[1]; l >= 0; --l) {
      long rest = t - c[0] * k - c[1] * l;
      if (rest % c[2] == 0) return std::array<long, 3>{k, l, rest / c[2]};
    }
  return std::nullopt;
}

std::optional<ObstructionCertificate> nondecomposability_certificate(const PythagoreanQuadruple& x,
                                                                     const std::optional<SpherePoint>& center) {
  const RationalAngle radius(1, 4);
  const auto& eq = area_equation();
  auto links = vertex_links(x);
  for (int v = 0; v < 4; ++v) {
    const auto& t = links[v];
    std::array<SignedInterval, 3> sides;
    try {
      sides = link_triangle_sides(t);
    } catch (const std::domain_error&) {
      continue;
    }
    Rational target = eq.scale * t.excess();
    if (area_diophantine(target)) continue;

    std::vector<std::pair<SpherePoint, std::string>> centers;
    if (center) centers.emplace_back(*center, "given");
    for (const auto& c : candidate_centers(t)) centers.emplace_back(c, "searched");
    for (const auto& [c, source] : centers) {
      auto d = check_diameter(t, c, radius);
      if (d.verdict != DiameterCheck::Verdict::kInside) continue;
      return ObstructionCertificate{x, v + 1, t, sides, c, radius, source, d, eq, target,
                                    infeasibility_reason(target)};
    }
  }
  return std::nullopt;
}

PythagoreanQuadruple obstruction_example() { return {{5, 18}, {2, 9}, {13, 18}, {11, 18}}; }

SpherePoint obstruction_example_center() { return {Rational(4, 25), Rational(0)}; }

std::string recheck(const ObstructionCertificate& c) {
  if (c.vertex < 1 || c.vertex > 4) return "vertex index out of range";
  if (!(vertex_links(c.quadruple)[c.vertex - 1] == c.triangle)) return "triangle is not the stated vertex link";
  std::array<SignedInterval, 3> sides;
  try {
    sides = link_triangle_sides(c.triangle);
  } catch (const std::domain_error& e) {
    return e.what();
  }
  for (int i = 0; i < 3; ++i)
    if (!overlaps(sides[i], c.sides[i])) return "side enclosure " + std::to_string(i) + " is wrong";

  auto d = check_diameter(c.triangle, c.center, c.radius);
  if (d.verdict != DiameterCheck::Verdict::kInside) return "diameter check does not hold";
  if (!overlaps(d.cos_radius, c.diameter.cos_radius)) return "stored cos(radius) enclosure is wrong";
  for (int i = 0; i < 3; ++i) {
    if (!overlaps(d.dots[i], c.diameter.dots[i])) return "stored distance enclosure " + std::to_string(i) + " is wrong";
    if (!(c.diameter.dots[i].lo > c.diameter.cos_radius.hi)) return "stored enclosures do not separate";
  }

  const auto& eq = area_equation();
  if (c.equation.excesses != eq.excesses || c.equation.scale != eq.scale || c.equation.coefficients != eq.coefficients)
    return "area equation differs from the re-derived one";
  if (c.target != eq.scale * c.triangle.excess()) return "target is not the scaled link area";
  if (area_diophantine(c.target)) return "area equation has a solution";
  if (c.infeasibility != infeasibility_reason(c.target)) return "infeasibility witness differs";
  return "";
}

SquareMatrix<CyclotomicNumber> lift_gram(const GramMatrix& g, int n) {
  if (n < 3) throw std::domain_error("lift_gram: dimension must be at least 3");
  if (g.size() != 4) throw std::domain_error("lift_gram: expected a 4 x 4 Gram matrix");
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  SquareMatrix<CyclotomicNumber> out(m, CyclotomicNumber(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i < 4 && j < 4) out.at(i, j) = g.at(i, j);
      else if (i == j) out.at(i, j) = CyclotomicNumber(1);
    }
  return out;
}

Rational lifted_volume_fraction(const Rational& f3, int n) {
  if (n < 3) throw std::domain_error("lifted_volume_fraction: dimension must be at least 3");
  if (f3 <= 0 || f3 >= 1) throw std::domain_error("lifted_volume_fraction: fraction must lie in (0, 1)");
  Rational out = f3;
  for (int i = 3; i < n; ++i) out /= 2;
  return out;
}

}  // namespace rattet
