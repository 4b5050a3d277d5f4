#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rattet/geometry.hpp"
#include "rattet/interval.hpp"

namespace rattet {

/// Row of the catalog of spherical Coxeter tetrahedra. Volume is 2 pi^2 / |W|,
/// with |W| the product of the degrees of the reflection group.
struct CoxeterEntry {
  int index = 0;
  std::string name;
  std::vector<int> degrees;  // empty for the parametric rows
  int parameters = 0;        // 0, 1 (k) or 2 (k, l)
  Rational tabulated;        // coefficient of pi^2 for the fixed rows

  // Coefficient of pi^2; k and l are only read by the parametric rows.
  Rational volume(const Rational& k = 0, const Rational& l = 0) const;
  // Volume derived from the degrees (fixed rows) or from the dihedral factor orders.
  Rational derived_volume(const Rational& k = 0, const Rational& l = 0) const;
};

/// Builds the 11 rows; throws std::logic_error if a derived volume disagrees with the table.
const std::vector<CoxeterEntry>& coxeter_catalog();

/// Spherical triangle given by its angles (multiples of pi).
struct LinkTriangle {
  std::array<RationalAngle, 3> angles;
  Rational excess() const;  // angle sum minus pi, as a multiple of pi
  std::string str() const;
  friend bool operator==(const LinkTriangle&, const LinkTriangle&) = default;
};

/// Enclosures of the sides (multiples of pi) opposite each angle; throws std::domain_error
/// unless the angles bound a proper spherical triangle.
std::array<SignedInterval, 3> link_triangle_sides(const LinkTriangle& t, int bits = 128);

// Vertex links of the tetrahedron with Gram layout (r, p, q | s): opposite facets 1..4.
std::array<LinkTriangle, 4> vertex_links(const PythagoreanQuadruple& x);

/// Point of S^2 at longitude lon*pi and latitude lat*pi.
struct SpherePoint {
  Rational lon;
  Rational lat;
};

class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DiameterCheck {
  enum class Verdict { kInside, kOutside, kInconclusive } verdict = Verdict::kInconclusive;
  int bits = 0;
  // Enclosures of <vertex, center> for the placed vertices, and of cos(radius).
  std::array<SignedInterval, 3> dots;
  SignedInterval cos_radius;
};

/// Places the triangle with one vertex at (1,0,0), the next at (cos l, sin l, 0) and the third
/// in the positive orthant, then decides whether every vertex is closer than `radius` to `center`.
/// Precision doubles from 64 up to 1024 bits.
DiameterCheck check_diameter(const LinkTriangle& t, const SpherePoint& center, const RationalAngle& radius);
/// True/false as decided by check_diameter; throws CertificationFailure if undecided.
bool diameter_certificate(const LinkTriangle& t, const SpherePoint& center, const RationalAngle& radius);

/// Areas of the triangles (2,3,3), (2,3,4), (2,3,5) as multiples of pi, and the common scale
/// turning them into the integer coefficients of the area equation.
struct AreaEquation {
  std::array<Rational, 3> excesses;
  Rational scale;
  std::array<long, 3> coefficients;
};

const AreaEquation& area_equation();

/// Nonnegative (k, l, m) with c0 k + c1 l + c2 m = target, or nullopt.
std::optional<std::array<long, 3>> area_diophantine(const Rational& target);

struct ObstructionCertificate {
  PythagoreanQuadruple quadruple;
  int vertex = 0;  // facet opposite the chosen vertex, 1..4
  LinkTriangle triangle;
  std::array<SignedInterval, 3> sides;
  SpherePoint center;
  RationalAngle radius;
  std::string center_source;  // "given" or "searched"
  DiameterCheck diameter;
  AreaEquation equation;
  Rational target;  // scale * area of the link
  std::string infeasibility;
};

/// Certificate that the tetrahedron is not a finite union of Coxeter tetrahedra, or nullopt when
/// no vertex link passes both checks. `center` is tried first for every link.
std::optional<ObstructionCertificate> nondecomposability_certificate(
    const PythagoreanQuadruple& x, const std::optional<SpherePoint>& center = std::nullopt);

// The tetrahedron of the family 11 instance t = pi/18 and its certificate centre.
PythagoreanQuadruple obstruction_example();
SpherePoint obstruction_example_center();

/// Recomputes every component of a certificate from its stored inputs. Returns an empty string
/// if it holds and a description of the first failed check otherwise.
std::string recheck(const ObstructionCertificate& c);

/// Block-diagonal (n+1) x (n+1) matrix with G in the top-left corner; throws std::domain_error for n < 3.
SquareMatrix<CyclotomicNumber> lift_gram(const GramMatrix& g, int n);
/// Fraction of Vol S^n taken by the lift of a tetrahedron that fills f3 of Vol S^3.
Rational lifted_volume_fraction(const Rational& f3, int n);

}  // namespace rattet
