#include "rattet/geometry.hpp"

#include <cmath>
#include <utility>

namespace rattet {

namespace {

RationalAngle pi_angle() { return {1, 1}; }

void require_open(const RationalAngle& x, const char* name) {
  if (!x.in_open_half_turn())
    throw std::domain_error(std::string("angle ") + name + " = " + x.str() + "*pi is outside (0, pi)");
}

std::pair<Rational, RationalAngle> term(long c, const RationalAngle& a) { return {Rational(c), a}; }

}  // namespace

PythagoreanQuadruple::PythagoreanQuadruple(RationalAngle p, RationalAngle q, RationalAngle r, RationalAngle s) {
  require_open(p, "p");
  require_open(q, "q");
  require_open(r, "r");
  require_open(s, "s");
  if (p < q) std::swap(p, q);
  if (r < s) std::swap(r, s);
  a_ = {p, q, r, s};
}

std::string PythagoreanQuadruple::str() const {
  return "(" + p().str() + ", " + q().str() + ", " + r().str() + ", " + s().str() + ")";
}

std::string RawQuadruple::str() const {
  return "(" + a.str() + ", " + b.str() + ", " + c.str() + ", " + d.str() + ")";
}

CyclotomicNumber quadruple_residual(const RationalAngle& p, const RationalAngle& q, const RationalAngle& r,
                                    const RationalAngle& s) {
  // cos p cos q + cos((r+s)/2) cos((r-s)/2) = (cos(p+q) + cos(p-q) + cos r + cos s) / 2
  std::pair<Rational, RationalAngle> t[] = {{Rational(1, 2), p + q}, {Rational(1, 2), p - q},
                                            {Rational(1, 2), r}, {Rational(1, 2), s}};
  return CyclotomicNumber::cosine_sum(t);
}

CyclotomicNumber quadruple_residual(const PythagoreanQuadruple& x) {
  return quadruple_residual(x.p(), x.q(), x.r(), x.s());
}

CyclotomicNumber triple_residual(const RationalAngle& p, const RationalAngle& q, const RationalAngle& r) {
  std::pair<Rational, RationalAngle> t[] = {{Rational(1, 2), p + q}, {Rational(1, 2), p - q}, {Rational(1), r}};
  return CyclotomicNumber::cosine_sum(t);
}

CyclotomicNumber raw_sum(const RawQuadruple& x) {
  std::pair<Rational, RationalAngle> t[] = {term(1, x.a), term(1, x.b), term(1, x.c), term(1, x.d)};
  return CyclotomicNumber::cosine_sum(t);
}

double raw_sum_double(const RawQuadruple& x) {
  return std::cos(x.a.radians()) + std::cos(x.b.radians()) + std::cos(x.c.radians()) + std::cos(x.d.radians());
}

std::optional<PythagoreanQuadruple> abcd_to_pqrs(const RawQuadruple& x) {
  RationalAngle p = (x.a + x.b).scaled(1, 2);
  RationalAngle q = (x.a - x.b).scaled(1, 2);
  if (!p.in_open_half_turn() || !q.in_open_half_turn() || !x.c.in_open_half_turn() || !x.d.in_open_half_turn())
    return std::nullopt;
  return PythagoreanQuadruple(p, q, x.c, x.d);
}

RawQuadruple pqrs_to_abcd(const PythagoreanQuadruple& x) {
  return {x.p() + x.q(), x.p() - x.q(), x.r(), x.s()};
}

GramMatrix gram_matrix(const PythagoreanQuadruple& x) {
  const CyclotomicNumber one(1);
  CyclotomicNumber cp = -cos_as_cyclotomic(x.p()), cq = -cos_as_cyclotomic(x.q());
  CyclotomicNumber cr = -cos_as_cyclotomic(x.r()), cs = -cos_as_cyclotomic(x.s());
  GramMatrix g(4, CyclotomicNumber());
  const CyclotomicNumber* layout[4][4] = {
      {&one, &cr, &cp, &cq},
      {&cr, &one, &cq, &cp},
      {&cp, &cq, &one, &cs},
      {&cq, &cp, &cs, &one},
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g.at(i, j) = *layout[i][j];
  return g;
}

RealizabilityCertificate realizability(const PythagoreanQuadruple& x) {
  auto m = gram_minors(cos_as_cyclotomic(x.p()), cos_as_cyclotomic(x.q()), cos_as_cyclotomic(x.r()),
                       cos_as_cyclotomic(x.s()), CyclotomicNumber(1));
  RealizabilityCertificate c{m.g3, m.g4, 0, 0, false};
  c.g3_sign = sign(c.g3);
  // G4 is only consulted once G3 is positive
  if (c.g3_sign > 0) {
    c.g4_sign = sign(c.g4);
    c.realizable = c.g4_sign > 0;
  } else {
    c.g4_sign = sign(c.g4);
  }
  return c;
}

Rational volume_polynomial(const Rational& p, const Rational& q, const Rational& r, const Rational& s) {
  return (r * (2 - r) / 2 + p * p + q * q + s * (2 - s) / 2 - 1) / 2;
}

VolumeCoefficient volume(const PythagoreanQuadruple& x) {
  if (!quadruple_residual(x).is_zero())
    throw ContractError("volume: " + x.str() + " does not satisfy the Pythagorean relation");
  auto cert = realizability(x);
  if (!cert.realizable)
    throw ContractError("volume: " + x.str() + " has no positive definite Gram matrix (G3 sign " +
                        std::to_string(cert.g3_sign) + ", G4 sign " + std::to_string(cert.g4_sign) + ")");
  Rational v = volume_polynomial(x.p().fraction(), x.q().fraction(), x.r().fraction(), x.s().fraction());
  if (v <= 0 || v >= 2) throw ContractError("volume: value out of range for " + x.str());
  return {v};
}

EdgeLengths edge_lengths(const PythagoreanQuadruple& x) {
  volume(x);
  return {x.p(), x.q(), pi_angle() - x.r(), pi_angle() - x.s()};
}

}  // namespace rattet
