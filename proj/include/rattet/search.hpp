#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rattet/families.hpp"
#include "rattet/geometry.hpp"

namespace rattet {

// Denominator lists; 0 stands for the zero angle.
inline const std::vector<std::int64_t> kListL0{0, 1, 2, 3};
inline const std::vector<std::int64_t> kListL1{3, 5};
inline const std::vector<std::int64_t> kListL2{3, 7};
inline const std::vector<std::int64_t> kListL3{3, 5, 15};

/// Admissible folded denominators for the four slots (a, b, c, d), as a union of cases.
struct DenominatorProfile {
  std::string name;
  std::vector<std::array<std::vector<std::int64_t>, 4>> cases;

  // Per rational length: all slots in L0; all in L0+L1; one slot in L0 and three in L2 or in L3.
  static DenominatorProfile published();
  // Every slot from the union of all lists.
  static DenominatorProfile union_grid();
  static DenominatorProfile l0_only();
  // Every folded denominator up to max_den.
  static DenominatorProfile capped(std::int64_t max_den);

  bool admits(const RawQuadruple& x) const;
};

std::vector<RawQuadruple> enumerate_candidates(const DenominatorProfile& profile);

struct SearchConfig {
  double tolerance = 1e-8;
  int workers = 1;
  DenominatorProfile profile = DenominatorProfile::published();
  MembershipRule rule = MembershipRule::kListedOrientation;
};

// Maximal length of a rational sub-sum with no rational proper sub-sum; nullopt if none.
std::optional<int> rational_length(const RawQuadruple& x);
bool prefilter_passes(const RawQuadruple& x, double tolerance);
bool confirm_zero(const RawQuadruple& x, const SearchConfig& cfg);

enum class Kernel { kSerial, kParallel };

struct ScanResult {
  std::size_t prefilter_pass = 0;
  std::vector<std::size_t> exact_zero;  // candidate indices, ascending
  std::vector<std::size_t> rejected;    // candidate indices failing the prefilter
};

ScanResult scan_candidates(const std::vector<RawQuadruple>& candidates, double tolerance, Kernel kernel, int workers);

struct OrbitAccounting {
  std::size_t canonical = 0;
  std::size_t with_pq_orders = 0;
  std::size_t with_all_orders = 0;
};

OrbitAccounting orbit_accounting(const std::vector<PythagoreanQuadruple>& xs);

struct SporadicEntry {
  PythagoreanQuadruple quadruple;
  EdgeLengths lengths;
  VolumeCoefficient volume;
  int g3_sign = 0;
  int g4_sign = 0;
  int rational_length = 0;
};

struct SearchReport {
  std::string profile;
  double tolerance = 0;
  int workers = 1;
  std::string rule;
  std::size_t candidate_count = 0;
  std::size_t prefilter_pass = 0;
  std::size_t exact_zero_count = 0;
  std::size_t raw_solution_count = 0;
  std::size_t realizable_count = 0;
  std::size_t family_member_count = 0;
  std::vector<PythagoreanQuadruple> raw_solutions;
  std::vector<PythagoreanQuadruple> realizable;
  std::vector<SporadicEntry> sporadic;
  std::map<int, std::size_t> family_hits;
  std::map<std::string, std::size_t> sporadic_count_by_rule;
  OrbitAccounting raw_orbits;
  OrbitAccounting realizable_orbits;
  std::array<std::size_t, 5> length_histogram{};  // index = rational length, 0 = none
  bool length_four_excluded = false;
  double seconds = 0;
};

SearchReport run_sporadic_search(const SearchConfig& cfg);

/// A term list with its exact value; item 2 depends on a free parameter.
struct ConwayJonesItem {
  int number = 0;
  std::vector<std::pair<Rational, AffineAngle>> terms;  // coeff * cos(angle * pi)
  Rational value;
  bool parametric = false;
};

const std::vector<ConwayJonesItem>& conway_jones_items();
// Exact check of the stated value (symbolic for the parametric item).
bool check_item(const ConwayJonesItem& item);

struct TripleReport {
  std::vector<PythagoreanTriple> solutions;   // non-trivial, p >= q
  std::vector<PythagoreanTriple> normalized;  // one per orbit, p, q <= pi/2
  std::size_t trivial_count = 0;
};

TripleReport search_triples(int workers = 1);

}  // namespace rattet
