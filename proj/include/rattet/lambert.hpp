#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rattet/geometry.hpp"

namespace rattet {

/// Spherical Lambert cube with essential angles a, b, c, each strictly between pi/2 and pi.
class LambertCube {
 public:
  LambertCube(RationalAngle a, RationalAngle b, RationalAngle c);

  const RationalAngle& a() const { return a_; }
  const RationalAngle& b() const { return b_; }
  const RationalAngle& c() const { return c_; }
  // Same cube with the angles sorted in decreasing order.
  LambertCube sorted() const;
  std::string str() const;

  friend bool operator==(const LambertCube&, const LambertCube&) = default;
  friend auto operator<=>(const LambertCube&, const LambertCube&) = default;

 private:
  RationalAngle a_, b_, c_;
};

// cos^2 a + cos^2 b + cos^2 c - 1
CyclotomicNumber lambert_residual(const RationalAngle& a, const RationalAngle& b, const RationalAngle& c);
/// Throws ContractError unless the residual vanishes.
VolumeCoefficient lambert_volume(const LambertCube& cube);

struct LambertSearchConfig {
  double tolerance = 1e-8;
  int workers = 1;
  // 0 searches the Conway-Jones denominator lists; otherwise every folded denominator up to max_den.
  std::int64_t max_den = 0;
};

struct LambertSearchReport {
  std::size_t candidate_count = 0;
  std::size_t prefilter_pass = 0;
  std::vector<LambertCube> cubes;  // sorted angles, ascending order of cubes
  std::vector<VolumeCoefficient> volumes;
  // The two parametric vanishing patterns and why neither yields a cube.
  bool pair_pattern_excluded = false;
  bool triple_pattern_excluded = false;
  bool no_family() const { return pair_pattern_excluded && triple_pattern_excluded; }
};

LambertSearchReport search_lambert(const LambertSearchConfig& cfg);
std::vector<LambertCube> search_rational_lambert_cubes();

/// Tetrahedron (pi/2, pi/2, pi/2, s) paired with a Lambert cube of equal volume.
struct CompanionTetrahedron {
  PythagoreanQuadruple quadruple;
  VolumeCoefficient volume;
  bool residual_vanishes = false;
  // "closed-form" when the quadruple relation holds, else "coxeter-product" via pi^2/(4k).
  std::string route;
  Rational k;  // s = pi/k
};

/// Builds T1, T2 and checks their volumes against the two cubes; throws ContractError on mismatch.
std::vector<CompanionTetrahedron> companion_tetrahedra();

// Every dihedral angle is a rational multiple of pi, so the Dehn invariant vanishes.
inline bool all_angles_rational(const LambertCube&) { return true; }
inline bool all_angles_rational(const PythagoreanQuadruple&) { return true; }

}  // namespace rattet
