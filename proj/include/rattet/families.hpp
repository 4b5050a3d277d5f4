#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rattet/geometry.hpp"
#include "rattet/trig_polynomial.hpp"

namespace rattet {

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// t*tau + u*upsilon + c >= 0
struct LinearConstraint {
  Rational t, u, c;
  Rational value(const Rational& tau, const Rational& upsilon) const { return t * tau + u * upsilon + c; }
  std::string str() const;
};

/// tt*tau^2 + tu*tau*upsilon + uu*upsilon^2 + t*tau + u*upsilon + c
struct Quadratic {
  Rational tt, tu, uu, t, u, c;
  Rational at(const Rational& tau, const Rational& upsilon = 0) const;
  friend bool operator==(const Quadratic&, const Quadratic&) = default;
  std::string str() const;
};

Quadratic operator*(const AffineAngle& x, const AffineAngle& y);
Quadratic operator+(const Quadratic& x, const Quadratic& y);
Quadratic operator*(const Rational& k, const Quadratic& x);

/// A one- or two-parameter family of quadruples with affine angles. Parameters
/// are tau*pi and upsilon*pi; volumes are multiples of pi^2.
struct FamilySpec {
  int id = 0;
  int parameters = 1;
  std::array<AffineAngle, 4> angles;  // p, q, r, s in listed order
  Quadratic volume;
  std::string domain_label;
  std::vector<LinearConstraint> printed_domain;
  // printed_domain plus the constraints needed for realizability
  std::vector<LinearConstraint> effective_domain;

  bool in_domain(const Rational& tau, const Rational& upsilon, bool printed = true) const;
  std::array<RationalAngle, 4> angles_at(const Rational& tau, const Rational& upsilon = 0) const;
};

const std::vector<FamilySpec>& builtin_families();
const FamilySpec& family(int id);

Quadratic volume_from_angles(const std::array<AffineAngle, 4>& angles);
TrigPolynomial family_residual(const FamilySpec& f);
GramMinors<TrigPolynomial> family_minors(const FamilySpec& f);

struct IdentityReport {
  int family_id = 0;
  bool verified = false;
  int points_per_axis = 0;
  int required_points = 0;
  std::size_t samples = 0;
  bool symbolic_zero = false;
  bool volume_matches = false;
  std::string failure;
};

IdentityReport check_identity(const FamilySpec& f);
/// Throws VerificationError naming the family and the failing point.
bool verify_identity(const FamilySpec& f);

struct CellBound {
  Rational t_lo, t_hi;
  int minor = 3;
  int derivative_order = 0;
  SignedInterval bound;
};

struct BoundaryZero {
  Rational tau, upsilon;
  int minor = 3;
  int order = 0;  // first non-vanishing derivative (one-parameter case)
};

struct SineFactor {
  AffineAngle argument;  // sin(argument * pi)
  int sign_on_interior = 0;
};

struct DomainCertificate {
  int family_id = 0;
  bool certified = false;
  std::string method;
  int max_depth = 0;
  std::size_t cell_count = 0;
  std::vector<CellBound> cells;
  std::vector<BoundaryZero> boundary_zeros;
  std::vector<std::pair<Rational, Rational>> polygon;
  std::vector<SineFactor> g3_factors;
  bool g4_is_g3_squared = false;
  bool domain_tightened = false;
  std::vector<LinearConstraint> certified_domain;
  std::optional<std::pair<Rational, Rational>> printed_domain_witness;
  std::vector<int> swap_duplicates;
  std::string failure;
};

DomainCertificate verify_domain(const FamilySpec& f);

enum class MembershipRule {
  // p<->q and r<->s swaps, parameters inside the printed domain
  kPrintedDomain,
  // p<->q and r<->s swaps, any parameter value
  kFullLine,
  // p, q in listed order, r<->s swap, any parameter value
  kListedOrientation,
};

const char* rule_name(MembershipRule r);

struct FamilyParameters {
  Rational tau = 0;
  Rational upsilon = 0;
  friend bool operator==(const FamilyParameters&, const FamilyParameters&) = default;
};

std::optional<FamilyParameters> member_of(const PythagoreanQuadruple& x, const FamilySpec& f,
                                          MembershipRule rule = MembershipRule::kPrintedDomain);

struct FamilyHit {
  int family_id;
  FamilyParameters params;
};

std::optional<FamilyHit> find_family(const PythagoreanQuadruple& x, MembershipRule rule);

/// Throws std::domain_error outside the certified domain.
std::pair<PythagoreanQuadruple, VolumeCoefficient> instantiate(const FamilySpec& f, const FamilyParameters& params);

// Families whose angle list coincides with f's after exchanging r and s.
std::vector<int> swap_duplicates(const FamilySpec& f);

}  // namespace rattet
