#include "rattet/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rattet {

namespace {

Rational rat(const char* s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

struct FamilyRow {
  int id;
  const char* angles[4][3];
  const char* volume[6];
};

// Angles as (constant, tau coefficient, upsilon coefficient); volume in the basis
// tau^2, tau*upsilon, upsilon^2, tau, upsilon, 1.
const FamilyRow kRows[] = {
    {1, {{"1/2", "1", "0"}, {"1/2", "0", "0"}, {"1/2", "0", "0"}, {"1/2", "0", "0"}}, {"1/2", "0", "0", "1/2", "0", "1/8"}},
    {2, {{"3/4", "-1/2", "0"}, {"1/4", "-1/2", "0"}, {"1/3", "-1", "0"}, {"1/3", "1", "0"}}, {"-1/4", "0", "0", "-1/2", "0", "13/144"}},
    {3, {{"1/2", "1", "0"}, {"1/2", "0", "0"}, {"1/3", "1", "0"}, {"2/3", "-1", "0"}}, {"0", "0", "0", "2/3", "0", "1/9"}},
    {4, {{"1/2", "0", "0"}, {"1/6", "1", "0"}, {"2/3", "-1", "0"}, {"1/3", "1", "0"}}, {"0", "0", "0", "1/3", "0", "0"}},
    {5, {{"2/3", "-1", "0"}, {"1/3", "0", "0"}, {"1/3", "1", "0"}, {"1/2", "0", "0"}}, {"1/4", "0", "0", "-1/3", "0", "5/48"}},
    {6, {{"1/2", "0", "0"}, {"1/2", "-1", "0"}, {"1/3", "1", "0"}, {"2/3", "-1", "0"}}, {"0", "0", "0", "-1/3", "0", "1/9"}},
    {7, {{"1/3", "1", "0"}, {"1/3", "0", "0"}, {"1/2", "0", "0"}, {"2/3", "-1", "0"}}, {"1/4", "0", "0", "1/6", "0", "1/48"}},
    {8, {{"2/3", "0", "0"}, {"1/3", "-1", "0"}, {"1/2", "0", "0"}, {"1/3", "-1", "0"}}, {"1/4", "0", "0", "-2/3", "0", "5/48"}},
    {9, {{"2/3", "0", "0"}, {"1/3", "1", "0"}, {"1/3", "1", "0"}, {"1/2", "0", "0"}}, {"1/4", "0", "0", "2/3", "0", "5/48"}},
    {10, {{"1/2", "0", "0"}, {"1/2", "-1", "0"}, {"1/3", "-1", "0"}, {"2/3", "1", "0"}}, {"0", "0", "0", "-2/3", "0", "1/9"}},
    {11, {{"1/4", "1/2", "0"}, {"1/4", "-1/2", "0"}, {"2/3", "1", "0"}, {"2/3", "-1", "0"}}, {"-1/4", "0", "0", "0", "0", "1/144"}},
    {12, {{"1/2", "1", "0"}, {"1/2", "0", "0"}, {"1/3", "-1", "0"}, {"2/3", "1", "0"}}, {"0", "0", "0", "1/3", "0", "1/9"}},
    {13, {{"1/2", "0", "0"}, {"1/6", "1", "0"}, {"1/2", "0", "0"}, {"1/2", "0", "0"}}, {"1/2", "0", "0", "1/6", "0", "1/72"}},
    {14, {{"1/2", "0", "0"}, {"1/2", "-1", "0"}, {"1/2", "0", "0"}, {"1/2", "0", "0"}}, {"1/2", "0", "0", "-1/2", "0", "1/8"}},
    {15, {{"1/3", "0", "0"}, {"1/3", "-1", "0"}, {"2/3", "1", "0"}, {"1/2", "0", "0"}}, {"1/4", "0", "0", "-1/6", "0", "1/48"}},
    {16, {{"3/4", "1/2", "0"}, {"1/4", "1/2", "0"}, {"1/3", "-1", "0"}, {"1/3", "1", "0"}}, {"-1/4", "0", "0", "1/2", "0", "13/144"}},
    {17, {{"3/4", "1/2", "0"}, {"1/4", "1/2", "0"}, {"1/3", "1", "0"}, {"1/3", "-1", "0"}}, {"-1/4", "0", "0", "1/2", "0", "13/144"}},
    {18, {{"1/4", "1/2", "0"}, {"1/4", "-1/2", "0"}, {"2/3", "-1", "0"}, {"2/3", "1", "0"}}, {"-1/4", "0", "0", "0", "0", "1/144"}},
    {19, {{"2/3", "1", "0"}, {"1/3", "0", "0"}, {"1/3", "-1", "0"}, {"1/2", "0", "0"}}, {"1/4", "0", "0", "1/3", "0", "5/48"}},
    {20, {{"1/2", "0", "0"}, {"1/6", "-1", "0"}, {"1/2", "0", "0"}, {"1/2", "0", "0"}}, {"1/2", "0", "0", "-1/6", "0", "1/72"}},
    {21, {{"2/3", "0", "0"}, {"1/3", "1", "0"}, {"1/2", "0", "0"}, {"1/3", "1", "0"}}, {"1/4", "0", "0", "2/3", "0", "5/48"}},
    {22, {{"3/4", "-1/2", "0"}, {"1/4", "-1/2", "0"}, {"1/3", "1", "0"}, {"1/3", "-1", "0"}}, {"-1/4", "0", "0", "-1/2", "0", "13/144"}},
    {23, {{"1/2", "0", "0"}, {"1/2", "-1", "0"}, {"2/3", "-1", "0"}, {"1/3", "1", "0"}}, {"0", "0", "0", "-1/3", "0", "1/9"}},
    {24, {{"1/2", "0", "0"}, {"1/6", "1", "0"}, {"1/3", "1", "0"}, {"2/3", "-1", "0"}}, {"0", "0", "0", "1/3", "0", "0"}},
    {25, {{"1/2", "1", "0"}, {"1/2", "0", "0"}, {"2/3", "1", "0"}, {"1/3", "-1", "0"}}, {"0", "0", "0", "1/3", "0", "1/9"}},
    {26, {{"3/4", "1/2", "0"}, {"3/4", "-1/2", "0"}, {"2/3", "-1", "0"}, {"2/3", "1", "0"}}, {"-1/4", "0", "0", "0", "0", "73/144"}},
    {27, {{"1/3", "1", "0"}, {"1/3", "0", "0"}, {"2/3", "-1", "0"}, {"1/2", "0", "0"}}, {"1/4", "0", "0", "1/6", "0", "1/48"}},
    {28, {{"2/3", "-1", "0"}, {"1/3", "0", "0"}, {"1/2", "0", "0"}, {"1/3", "1", "0"}}, {"1/4", "0", "0", "-1/3", "0", "5/48"}},
    {29, {{"1/3", "0", "0"}, {"1/3", "-1", "0"}, {"1/2", "0", "0"}, {"2/3", "1", "0"}}, {"1/4", "0", "0", "-1/6", "0", "1/48"}},
    {30, {{"1/2", "0", "0"}, {"1/2", "-1", "0"}, {"2/3", "1", "0"}, {"1/3", "-1", "0"}}, {"0", "0", "0", "-2/3", "0", "1/9"}},
    {31, {{"2/3", "1", "0"}, {"1/3", "0", "0"}, {"1/2", "0", "0"}, {"1/3", "-1", "0"}}, {"1/4", "0", "0", "1/3", "0", "5/48"}},
    {32, {{"2/3", "0", "0"}, {"1/3", "-1", "0"}, {"1/3", "-1", "0"}, {"1/2", "0", "0"}}, {"1/4", "0", "0", "-2/3", "0", "5/48"}},
    {33, {{"1/2", "1", "0"}, {"1/2", "0", "0"}, {"2/3", "-1", "0"}, {"1/3", "1", "0"}}, {"0", "0", "0", "2/3", "0", "1/9"}},
    {34, {{"3/4", "1/2", "0"}, {"3/4", "-1/2", "0"}, {"2/3", "1", "0"}, {"2/3", "-1", "0"}}, {"-1/4", "0", "0", "0", "0", "73/144"}},
    {35, {{"1/2", "0", "0"}, {"1/2", "0", "-1"}, {"1", "-1", "0"}, {"0", "1", "0"}}, {"-1/2", "0", "1/2", "1/2", "-1/2", "0"}},
    {36, {{"1/2", "0", "0"}, {"1/2", "0", "-1"}, {"0", "1", "0"}, {"1", "-1", "0"}}, {"-1/2", "0", "1/2", "1/2", "-1/2", "0"}},
    {37, {{"1/2", "0", "1"}, {"1/2", "0", "0"}, {"1", "-1", "0"}, {"0", "1", "0"}}, {"-1/2", "0", "1/2", "1/2", "1/2", "0"}},
    {38, {{"1/2", "0", "1"}, {"1/2", "0", "0"}, {"0", "1", "0"}, {"1", "-1", "0"}}, {"-1/2", "0", "1/2", "1/2", "1/2", "0"}},
    {39, {{"1/2", "0", "0"}, {"1/2", "-1", "0"}, {"1", "0", "-1"}, {"0", "0", "1"}}, {"1/2", "0", "-1/2", "-1/2", "1/2", "0"}},
    {40, {{"1/2", "0", "0"}, {"1/2", "-1", "0"}, {"0", "0", "1"}, {"1", "0", "-1"}}, {"1/2", "0", "-1/2", "-1/2", "1/2", "0"}},
    {41, {{"1/2", "1", "0"}, {"1/2", "0", "0"}, {"1", "0", "-1"}, {"0", "0", "1"}}, {"1/2", "0", "-1/2", "1/2", "1/2", "0"}},
    {42, {{"1/2", "1", "0"}, {"1/2", "0", "0"}, {"0", "0", "1"}, {"1", "0", "-1"}}, {"1/2", "0", "-1/2", "1/2", "1/2", "0"}},
};

LinearConstraint ge(long t, long u, const Rational& c) { return {Rational(t), Rational(u), c}; }

FamilySpec build(const FamilyRow& row) {
  FamilySpec f;
  f.id = row.id;
  for (int i = 0; i < 4; ++i)
    f.angles[i] = AffineAngle(rat(row.angles[i][0]), rat(row.angles[i][1]), rat(row.angles[i][2]));
  const auto& v = row.volume;
  f.volume = {rat(v[0]), rat(v[1]), rat(v[2]), rat(v[3]), rat(v[4]), rat(v[5])};
  if (row.id <= 34) {
    f.parameters = 1;
    f.domain_label = "0 <= t <= pi/6";
    f.printed_domain = {ge(1, 0, 0), ge(-1, 0, Rational(1, 6))};
    f.effective_domain = f.printed_domain;
  } else if (row.id <= 38) {
    f.parameters = 2;
    f.domain_label = "A";
    // 0 <= u <= pi/2, 0 <= t <= pi, t >= u
    f.printed_domain = {ge(0, 1, 0), ge(0, -1, Rational(1, 2)), ge(1, 0, 0), ge(-1, 0, 1), ge(1, -1, 0)};
    f.effective_domain = f.printed_domain;
    f.effective_domain.push_back(ge(-1, -1, 1));
  } else {
    f.parameters = 2;
    f.domain_label = "B";
    // 0 <= u <= pi, 0 <= t <= pi/2, t <= u
    f.printed_domain = {ge(0, 1, 0), ge(0, -1, 1), ge(1, 0, 0), ge(-1, 0, Rational(1, 2)), ge(-1, 1, 0)};
    f.effective_domain = f.printed_domain;
    f.effective_domain.push_back(ge(-1, -1, 1));
  }
  return f;
}

bool satisfies(const std::vector<LinearConstraint>& cs, const Rational& tau, const Rational& upsilon) {
  return std::all_of(cs.begin(), cs.end(), [&](const auto& c) { return c.value(tau, upsilon) >= 0; });
}

bool strictly_inside(const std::vector<LinearConstraint>& cs, const Rational& tau, const Rational& upsilon) {
  return std::all_of(cs.begin(), cs.end(), [&](const auto& c) { return c.value(tau, upsilon) > 0; });
}

// Vertices of the feasible region; for one-parameter families the two interval ends.
std::vector<std::pair<Rational, Rational>> polygon_vertices(const std::vector<LinearConstraint>& cs, int parameters) {
  std::vector<std::pair<Rational, Rational>> out;
  if (parameters == 1) {
    std::optional<Rational> lo, hi;
    for (const auto& c : cs) {
      if (c.t > 0) lo = lo ? std::max(*lo, Rational(-c.c / c.t)) : Rational(-c.c / c.t);
      if (c.t < 0) hi = hi ? std::min(*hi, Rational(-c.c / c.t)) : Rational(-c.c / c.t);
    }
    if (!lo || !hi || *lo > *hi) throw std::logic_error("unbounded or empty parameter interval");
    return {{*lo, Rational(0)}, {*hi, Rational(0)}};
  }
  std::set<std::pair<Rational, Rational>> seen;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      Rational det = cs[i].t * cs[j].u - cs[i].u * cs[j].t;
      if (det == 0) continue;
      Rational tau = (-cs[i].c * cs[j].u + cs[j].c * cs[i].u) / det;
      Rational ups = (-cs[j].c * cs[i].t + cs[i].c * cs[j].t) / det;
      if (satisfies(cs, tau, ups)) seen.emplace(tau, ups);
    }
  out.assign(seen.begin(), seen.end());
  return out;
}

// Sign of sin(pi*L) on the interior of the convex hull of the vertices, or 0 if not constant.
int sine_sign_on_interior(const AffineAngle& l, const std::vector<std::pair<Rational, Rational>>& vertices) {
  Rational lo = l.at(vertices[0].first, vertices[0].second), hi = lo;
  for (const auto& [tau, ups] : vertices) {
    Rational v = l.at(tau, ups);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (lo == hi && lo == Rational(k)) return 0;
  if (hi > Rational(k) + 1) return 0;
  return mpz_even_p(k.get_mpz_t()) ? 1 : -1;
}

bool angles_stay_open(const FamilySpec& f, const std::vector<std::pair<Rational, Rational>>& vertices) {
  for (const auto& a : f.angles) {
    Rational lo = a.at(vertices[0].first, vertices[0].second), hi = lo;
    for (const auto& [tau, ups] : vertices) {
      lo = std::min(lo, a.at(tau, ups));
      hi = std::max(hi, a.at(tau, ups));
    }
    if (lo < 0 || hi > 1) return false;
    if (lo == hi && (lo == 0 || lo == 1)) return false;
  }
  return true;
}

constexpr int kMaxDepth = 40;
constexpr int kMaxDerivative = 12;
constexpr int kCellBits = 64;

struct EndpointData {
  Rational at;
  bool zero = false;
  int order = 0;
  int derivative_sign = 0;  // sign the order-th derivative must keep near the endpoint
  TrigPolynomial derivative;
};

// Positivity of g on the open interval (lo, hi) by subdivision; exact zeros at
// the ends are handled through the first non-vanishing derivative.
bool certify_interval(const TrigPolynomial& g, int minor, const Rational& lo, const Rational& hi,
                      DomainCertificate& cert) {
  EndpointData ends[2];
  for (int side = 0; side < 2; ++side) {
    EndpointData& e = ends[side];
    e.at = side == 0 ? lo : hi;
    int s = g.sign_at(e.at);
    if (s > 0) continue;
    if (s < 0) {
      cert.failure = "minor G" + std::to_string(minor) + " negative at endpoint t = " + e.at.get_str() + "*pi";
      return false;
    }
    e.zero = true;
    TrigPolynomial d = g;
    for (int m = 1; m <= kMaxDerivative; ++m) {
      d = d.derivative_t();
      int ds = d.sign_at(e.at);
      if (ds == 0) continue;
      // g(x) = g^(m)(xi) (x - e)^m / m!, and x - e < 0 at the right end
      int local = side == 0 ? ds : ((m % 2) ? -ds : ds);
      if (local < 0) {
        cert.failure = "minor G" + std::to_string(minor) + " turns negative next to t = " + e.at.get_str() + "*pi";
        return false;
      }
      e.order = m;
      e.derivative_sign = ds;
      e.derivative = d;
      break;
    }
    if (e.order == 0) {
      cert.failure = "minor G" + std::to_string(minor) + " vanishes to high order at t = " + e.at.get_str() + "*pi";
      return false;
    }
    cert.boundary_zeros.push_back({e.at, Rational(0), minor, e.order});
  }

  struct Cell {
    Rational a, b;
    int depth;
  };
  std::vector<Cell> stack{{lo, hi, 0}};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    cert.max_depth = std::max(cert.max_depth, c.depth);
    SignedInterval b = g.enclose({c.a, c.b}, kCellBits);
    if (b.lo > 0) {
      cert.cells.push_back({c.a, c.b, minor, 0, round_outward(b, 64)});
      continue;
    }
    bool done = false;
    for (const auto& e : ends) {
      if (!e.zero || (c.a != e.at && c.b != e.at)) continue;
      SignedInterval db = e.derivative.enclose({c.a, c.b}, kCellBits);
      if (db.certain_sign() == e.derivative_sign) {
        cert.cells.push_back({c.a, c.b, minor, e.order, round_outward(db, 64)});
        done = true;
      }
    }
    if (done) continue;
    Rational mid = (c.a + c.b) / 2;
    // dyadic midpoints leave the supported cyclotomic orders; a certified point enclosure suffices
    if (g.enclose({mid, mid}, 2 * kCellBits).certain_sign() < 0) {
      cert.failure = "minor G" + std::to_string(minor) + " negative at interior point t = " + mid.get_str() + "*pi";
      return false;
    }
    if (c.depth >= kMaxDepth) {
      cert.failure = "minor G" + std::to_string(minor) + " inconclusive near t = " + mid.get_str() + "*pi";
      return false;
    }
    stack.push_back({mid, c.b, c.depth + 1});
    stack.push_back({c.a, mid, c.depth + 1});
  }
  return true;
}

bool certify_two_parameter(const FamilySpec& f, const GramMinors<TrigPolynomial>& m,
                           const std::vector<std::pair<Rational, Rational>>& vertices, DomainCertificate& cert) {
  cert.g3_factors.clear();
  auto terms = m.g3.terms();
  if (m.g3.constant_term() != 0 || terms.size() != 2 || abs(terms[0].first) != abs(terms[1].first)) {
    cert.failure = "G3 is not a difference of two cosines";
    return false;
  }
  // c (cos A - cos B) = -2c sin((A+B)/2) sin((A-B)/2), using c cos B = -c cos(B + pi)
  const Rational& c = terms[0].first;
  const AffineAngle& a = terms[0].second;
  AffineAngle b = terms[1].second;
  if (terms[1].first == c) b.constant += 1;
  AffineAngle half_sum = Rational(1, 2) * (a + b), half_diff = Rational(1, 2) * (a - b);
  int s1 = sine_sign_on_interior(half_sum, vertices);
  int s2 = sine_sign_on_interior(half_diff, vertices);
  cert.g3_factors = {{half_sum, s1}, {half_diff, s2}};
  int g3_sign = -sgn(c) * s1 * s2;
  if (g3_sign <= 0) {
    cert.failure = "G3 changes sign or is negative on the domain of family " + std::to_string(f.id);
    return false;
  }
  cert.g4_is_g3_squared = (m.g4 - m.g3 * m.g3).is_identically_zero();
  if (!cert.g4_is_g3_squared) {
    cert.failure = "G4 is not the square of G3";
    return false;
  }
  for (const auto& [tau, ups] : vertices)
    if (m.g3.sign_at(tau, ups) == 0) cert.boundary_zeros.push_back({tau, ups, 3, 0});
  return true;
}

}  // namespace

std::string LinearConstraint::str() const {
  std::ostringstream out;
  out << t << "*t + " << u << "*u + " << c << " >= 0";
  return out.str();
}

Rational Quadratic::at(const Rational& tau, const Rational& upsilon) const {
  return tt * tau * tau + tu * tau * upsilon + uu * upsilon * upsilon + t * tau + u * upsilon + c;
}

std::string Quadratic::str() const {
  std::ostringstream out;
  out << tt << "*t^2 + " << tu << "*t*u + " << uu << "*u^2 + " << t << "*pi*t + " << u << "*pi*u + " << c << "*pi^2";
  return out.str();
}

Quadratic operator*(const AffineAngle& x, const AffineAngle& y) {
  return {x.t * y.t,
          x.t * y.u + x.u * y.t,
          x.u * y.u,
          x.t * y.constant + x.constant * y.t,
          x.u * y.constant + x.constant * y.u,
          x.constant * y.constant};
}

Quadratic operator+(const Quadratic& x, const Quadratic& y) {
  return {x.tt + y.tt, x.tu + y.tu, x.uu + y.uu, x.t + y.t, x.u + y.u, x.c + y.c};
}

Quadratic operator*(const Rational& k, const Quadratic& x) {
  return {k * x.tt, k * x.tu, k * x.uu, k * x.t, k * x.u, k * x.c};
}

bool FamilySpec::in_domain(const Rational& tau, const Rational& upsilon, bool printed) const {
  return satisfies(printed ? printed_domain : effective_domain, tau, upsilon);
}

std::array<RationalAngle, 4> FamilySpec::angles_at(const Rational& tau, const Rational& upsilon) const {
  return {RationalAngle(angles[0].at(tau, upsilon)), RationalAngle(angles[1].at(tau, upsilon)),
          RationalAngle(angles[2].at(tau, upsilon)), RationalAngle(angles[3].at(tau, upsilon))};
}

const std::vector<FamilySpec>& builtin_families() {
  static const std::vector<FamilySpec> families = [] {
    std::vector<FamilySpec> v;
    for (const auto& row : kRows) v.push_back(build(row));
    return v;
  }();
  return families;
}

const FamilySpec& family(int id) {
  const auto& all = builtin_families();
  if (id < 1 || id > static_cast<int>(all.size())) throw std::out_of_range("no family " + std::to_string(id));
  return all[id - 1];
}

Quadratic volume_from_angles(const std::array<AffineAngle, 4>& a) {
  // (r(2 - r)/2 + p^2 + q^2 + s(2 - s)/2 - 1) / 2
  const AffineAngle two(2);
  Quadratic sum = Rational(1, 2) * (a[2] * (two - a[2])) + a[0] * a[0] + a[1] * a[1] +
                  Rational(1, 2) * (a[3] * (two - a[3]));
  sum.c -= 1;
  return Rational(1, 2) * sum;
}

TrigPolynomial family_residual(const FamilySpec& f) {
  auto c = [&](int i) { return TrigPolynomial::cosine(f.angles[i]); };
  return c(0) * c(1) + Rational(1, 2) * (c(2) + c(3));
}

GramMinors<TrigPolynomial> family_minors(const FamilySpec& f) {
  auto c = [&](int i) { return TrigPolynomial::cosine(f.angles[i]); };
  return gram_minors(c(0), c(1), c(2), c(3), TrigPolynomial(1));
}

IdentityReport check_identity(const FamilySpec& f) {
  IdentityReport rep;
  rep.family_id = f.id;
  // The residual is a finite sum of cos(pi*(c + b*tau + e*upsilon)). Restricted to
  // the sample line tau = k*h it is an exponential polynomial in k whose nodes
  // exp(i*pi*b*h) are distinct while h*(max b - min b) < 2; vanishing at more
  // points than there are frequencies then forces every amplitude to vanish.
  // The same holds per axis on a product grid.
  const Rational h(1, 105);
  constexpr int kPoints = 33;
  TrigPolynomial res = family_residual(f);
  auto tf = res.t_frequencies(), uf = res.u_frequencies();
  rep.required_points = static_cast<int>(std::max(tf.size(), f.parameters == 2 ? uf.size() : std::size_t{1}));
  rep.points_per_axis = kPoints;
  if (rep.required_points > kPoints || h * (tf.back() - tf.front()) >= 2 || h * (uf.back() - uf.front()) >= 2) {
    rep.failure = "sample grid too coarse for the frequency support";
    return rep;
  }
  int u_points = f.parameters == 2 ? kPoints : 1;
  for (int i = 0; i < kPoints; ++i)
    for (int j = 0; j < u_points; ++j) {
      Rational tau = h * i, ups = h * j;
      auto a = f.angles_at(tau, ups);
      ++rep.samples;
      if (!quadruple_residual(a[0], a[1], a[2], a[3]).is_zero()) {
        rep.failure = "family " + std::to_string(f.id) + ": residual nonzero at t = " + tau.get_str() +
                      "*pi, u = " + ups.get_str() + "*pi";
        return rep;
      }
    }
  rep.symbolic_zero = res.is_identically_zero();
  rep.volume_matches = volume_from_angles(f.angles) == f.volume;
  if (!rep.symbolic_zero) rep.failure = "family " + std::to_string(f.id) + ": symbolic expansion does not vanish";
  else if (!rep.volume_matches) rep.failure = "family " + std::to_string(f.id) + ": tabulated volume differs";
  rep.verified = rep.failure.empty();
  return rep;
}

bool verify_identity(const FamilySpec& f) {
  auto rep = check_identity(f);
  if (!rep.verified) throw VerificationError(rep.failure);
  return true;
}

std::vector<int> swap_duplicates(const FamilySpec& f) {
  std::vector<int> out;
  for (const auto& g : builtin_families()) {
    if (g.id == f.id) continue;
    if (g.angles[0] == f.angles[0] && g.angles[1] == f.angles[1] && g.angles[2] == f.angles[3] &&
        g.angles[3] == f.angles[2])
      out.push_back(g.id);
  }
  return out;
}

DomainCertificate verify_domain(const FamilySpec& f) {
  DomainCertificate cert;
  cert.family_id = f.id;
  cert.swap_duplicates = swap_duplicates(f);
  auto minors = family_minors(f);

  if (f.parameters == 1) {
    cert.method = "interval subdivision";
    auto vertices = polygon_vertices(f.printed_domain, 1);
    cert.polygon = vertices;
    cert.certified_domain = f.printed_domain;
    if (!angles_stay_open(f, vertices)) {
      cert.failure = "an angle leaves (0, pi) inside the domain";
      return cert;
    }
    const Rational& lo = vertices[0].first;
    const Rational& hi = vertices[1].first;
    cert.certified = certify_interval(minors.g3, 3, lo, hi, cert) && certify_interval(minors.g4, 4, lo, hi, cert);
    cert.cell_count = cert.cells.size();
    return cert;
  }

  cert.method = "sine factorization";
  auto printed = polygon_vertices(f.printed_domain, 2);
  DomainCertificate attempt = cert;
  if (angles_stay_open(f, printed) && certify_two_parameter(f, minors, printed, attempt)) {
    attempt.polygon = printed;
    attempt.certified_domain = f.printed_domain;
    attempt.certified = true;
    return attempt;
  }
  // Locate an interior point of the printed domain that is not realizable.
  for (int bound = -1; bound <= 0 && !cert.printed_domain_witness; ++bound)
    for (int i = 1; i < 24 && !cert.printed_domain_witness; ++i)
      for (int j = 1; j < 24; ++j) {
        Rational tau = make_rational(i, 24), ups = make_rational(j, 24);
        if (!strictly_inside(f.printed_domain, tau, ups)) continue;
        if (minors.g3.sign_at(tau, ups) <= bound || minors.g4.sign_at(tau, ups) <= bound) {
          cert.printed_domain_witness = std::make_pair(tau, ups);
          break;
        }
      }
  cert.domain_tightened = true;
  auto effective = polygon_vertices(f.effective_domain, 2);
  cert.polygon = effective;
  cert.certified_domain = f.effective_domain;
  if (!angles_stay_open(f, effective)) {
    cert.failure = "an angle leaves (0, pi) inside the domain";
    return cert;
  }
  cert.certified = certify_two_parameter(f, minors, effective, cert);
  return cert;
}

const char* rule_name(MembershipRule r) {
  switch (r) {
    case MembershipRule::kPrintedDomain: return "printed-domain";
    case MembershipRule::kFullLine: return "full-line";
    case MembershipRule::kListedOrientation: return "listed-orientation";
  }
  return "?";
}

std::optional<FamilyParameters> member_of(const PythagoreanQuadruple& x, const FamilySpec& f, MembershipRule rule) {
  const auto& a = f.angles;
  bool swap_pq = rule != MembershipRule::kListedOrientation;
  for (int pq = 0; pq < (swap_pq ? 2 : 1); ++pq)
    for (int rs = 0; rs < 2; ++rs) {
      Rational target[4] = {(pq ? x.q() : x.p()).fraction(), (pq ? x.p() : x.q()).fraction(),
                            (rs ? x.s() : x.r()).fraction(), (rs ? x.r() : x.s()).fraction()};
      // solve constant + t*tau + u*upsilon = target for the unknown parameters
      std::optional<FamilyParameters> sol;
      for (int i = 0; i < 4 && !sol; ++i)
        for (int j = i; j < 4 && !sol; ++j) {
          if (f.parameters == 1) {
            if (i != j || a[i].t == 0) continue;
            sol = FamilyParameters{(target[i] - a[i].constant) / a[i].t, 0};
          } else {
            Rational det = a[i].t * a[j].u - a[i].u * a[j].t;
            if (det == 0) continue;
            Rational bi = target[i] - a[i].constant, bj = target[j] - a[j].constant;
            sol = FamilyParameters{(bi * a[j].u - bj * a[i].u) / det, (a[i].t * bj - a[j].t * bi) / det};
          }
        }
      if (!sol) continue;
      bool all = true;
      for (int i = 0; i < 4; ++i) all = all && a[i].at(sol->tau, sol->upsilon) == target[i];
      if (!all) continue;
      if (rule == MembershipRule::kPrintedDomain) {
        if (!f.in_domain(sol->tau, sol->upsilon, true)) continue;
        // boundary points count only when the tetrahedron is non-degenerate
        if (!strictly_inside(f.printed_domain, sol->tau, sol->upsilon) && !is_realizable(x)) continue;
      }
      return sol;
    }
  return std::nullopt;
}

std::optional<FamilyHit> find_family(const PythagoreanQuadruple& x, MembershipRule rule) {
  for (const auto& f : builtin_families())
    if (auto p = member_of(x, f, rule)) return FamilyHit{f.id, *p};
  return std::nullopt;
}

std::pair<PythagoreanQuadruple, VolumeCoefficient> instantiate(const FamilySpec& f, const FamilyParameters& params) {
  if (!f.in_domain(params.tau, params.upsilon, false))
    throw std::domain_error("instantiate: parameters (" + params.tau.get_str() + ", " + params.upsilon.get_str() +
                            ") outside the domain of family " + std::to_string(f.id));
  auto a = f.angles_at(params.tau, params.upsilon);
  PythagoreanQuadruple x(a[0], a[1], a[2], a[3]);
  VolumeCoefficient v = volume(x);
  if (v.value != f.volume.at(params.tau, params.upsilon))
    throw VerificationError("family " + std::to_string(f.id) + ": tabulated volume disagrees with the angle formula");
  return {x, v};
}

}  // namespace rattet
