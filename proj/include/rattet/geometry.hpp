#pragma once

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rattet/cyclotomic.hpp"
#include "rattet/rational_angle.hpp"

namespace rattet {

/// Raised when an operation is called outside the hypotheses it depends on.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dihedral angles (p, q, r, s) of a Z2-symmetric tetrahedron in canonical
/// order p >= q, r >= s. Each angle lies strictly between 0 and pi.
class PythagoreanQuadruple {
 public:
  PythagoreanQuadruple(RationalAngle p, RationalAngle q, RationalAngle r, RationalAngle s);

  const RationalAngle& p() const { return a_[0]; }
  const RationalAngle& q() const { return a_[1]; }
  const RationalAngle& r() const { return a_[2]; }
  const RationalAngle& s() const { return a_[3]; }
  const std::array<RationalAngle, 4>& angles() const { return a_; }
  std::string str() const;

  friend bool operator==(const PythagoreanQuadruple&, const PythagoreanQuadruple&) = default;
  friend auto operator<=>(const PythagoreanQuadruple&, const PythagoreanQuadruple&) = default;

 private:
  std::array<RationalAngle, 4> a_;
};

/// Angles of the cosine sum cos a + cos b + cos c + cos d, with a = p + q,
/// b = p - q, c = r, d = s. Ranges: 0 < a < 2pi, 0 <= b < pi, 0 < d <= c < pi.
struct RawQuadruple {
  RationalAngle a, b, c, d;
  friend bool operator==(const RawQuadruple&, const RawQuadruple&) = default;
  friend auto operator<=>(const RawQuadruple&, const RawQuadruple&) = default;
  std::string str() const;
};

struct PythagoreanTriple {
  RationalAngle p, q, r;
  friend bool operator==(const PythagoreanTriple&, const PythagoreanTriple&) = default;
  friend auto operator<=>(const PythagoreanTriple&, const PythagoreanTriple&) = default;
};

CyclotomicNumber quadruple_residual(const RationalAngle& p, const RationalAngle& q, const RationalAngle& r,
                                    const RationalAngle& s);
CyclotomicNumber quadruple_residual(const PythagoreanQuadruple& x);
CyclotomicNumber triple_residual(const RationalAngle& p, const RationalAngle& q, const RationalAngle& r);
CyclotomicNumber raw_sum(const RawQuadruple& x);
double raw_sum_double(const RawQuadruple& x);

// std::nullopt when some angle falls outside (0, pi).
std::optional<PythagoreanQuadruple> abcd_to_pqrs(const RawQuadruple& x);
RawQuadruple pqrs_to_abcd(const PythagoreanQuadruple& x);

template <class T>
class SquareMatrix {
 public:
  SquareMatrix(std::size_t n, const T& zero) : n_(n), v_(n * n, zero) {}
  std::size_t size() const { return n_; }
  T& at(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }
  bool symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!(at(i, j) == at(j, i))) return false;
    return true;
  }

 private:
  std::size_t n_;
  std::vector<T> v_;
};

/// Determinant of the leading k x k block by Laplace expansion over column
/// subsets; uses only ring operations.
template <class T>
T leading_minor(const SquareMatrix<T>& m, std::size_t k, const T& zero, const T& one) {
  std::vector<T> det(std::size_t{1} << k, zero);
  det[0] = one;
  for (std::size_t mask = 1; mask < det.size(); ++mask) {
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    T acc = zero;
    int above = 0;
    for (int j = static_cast<int>(k) - 1; j >= 0; --j) {
      if (!(mask >> j & 1)) continue;
      T term = m.at(row, j) * det[mask & ~(std::size_t{1} << j)];
      if (above % 2) acc = acc - term;
      else acc = acc + term;
      ++above;
    }
    det[mask] = acc;
  }
  return det.back();
}

using GramMatrix = SquareMatrix<CyclotomicNumber>;

GramMatrix gram_matrix(const PythagoreanQuadruple& x);

/// Corner minors G3 and G4 written in the cosines of p, q, r, s. Works for any
/// commutative ring type with +, -, * and construction from an integer.
template <class R>
struct GramMinors {
  R g3;
  R g4;
};

template <class R>
GramMinors<R> gram_minors(const R& cp, const R& cq, const R& cr, const R& cs, const R& one) {
  R two = one + one;
  R g3 = one - cr * cr - cp * cp - cq * cq - two * cr * cp * cq;
  R sum = cp + cq, diff = cp - cq;
  R f1 = (one - cr) * (one - cs) - sum * sum;
  R f2 = (one + cr) * (one + cs) - diff * diff;
  return {g3, f1 * f2};
}

struct RealizabilityCertificate {
  CyclotomicNumber g3;
  CyclotomicNumber g4;
  int g3_sign = 0;
  int g4_sign = 0;
  bool realizable = false;
};

RealizabilityCertificate realizability(const PythagoreanQuadruple& x);
inline bool is_realizable(const PythagoreanQuadruple& x) { return realizability(x).realizable; }

struct VolumeCoefficient {
  Rational value;  // volume = value * pi^2
  friend bool operator==(const VolumeCoefficient&, const VolumeCoefficient&) = default;
};

struct EdgeLengths {
  RationalAngle lp, lq, lr, ls;
  friend bool operator==(const EdgeLengths&, const EdgeLengths&) = default;
  friend auto operator<=>(const EdgeLengths&, const EdgeLengths&) = default;
};

// The closed-form volume polynomial, without checking its hypotheses.
Rational volume_polynomial(const Rational& p, const Rational& q, const Rational& r, const Rational& s);
/// Throws ContractError unless the residual vanishes and the Gram matrix is positive definite.
VolumeCoefficient volume(const PythagoreanQuadruple& x);
EdgeLengths edge_lengths(const PythagoreanQuadruple& x);

}  // namespace rattet
