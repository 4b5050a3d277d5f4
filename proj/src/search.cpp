#include "rattet/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>

#include <omp.h>

namespace rattet {

namespace {

void append_unique(std::vector<std::int64_t>& v, const std::vector<std::int64_t>& extra) {
  for (auto d : extra)
    if (std::find(v.begin(), v.end(), d) == v.end()) v.push_back(d);
  std::sort(v.begin(), v.end());
}

std::vector<std::int64_t> merged(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> v = a;
  append_unique(v, b);
  return v;
}

bool contains(const std::vector<std::int64_t>& v, std::int64_t d) { return std::find(v.begin(), v.end(), d) != v.end(); }

// Angles x with the given reduced denominator inside the slot's range.
// Slot 0: 0 < x < 2; slot 1: 0 <= x < 1; slots 2, 3: 0 < x < 1.
std::vector<RationalAngle> slot_values(int slot, const std::vector<std::int64_t>& dens) {
  std::vector<RationalAngle> out;
  for (auto d : dens) {
    if (d == 0) {
      if (slot == 1) out.emplace_back(0, 1);
      continue;
    }
    std::int64_t hi = slot == 0 ? 2 * d : d;
    for (std::int64_t n = 1; n < hi; ++n)
      if (std::gcd(n, d) == 1) out.emplace_back(n, d);
    if (d == 1 && slot == 0) out.emplace_back(1, 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

DenominatorProfile DenominatorProfile::published() {
  DenominatorProfile p;
  p.name = "published";
  auto l01 = merged(kListL0, kListL1);
  p.cases.push_back({kListL0, kListL0, kListL0, kListL0});
  p.cases.push_back({l01, l01, l01, l01});
  for (const auto* l : {&kListL2, &kListL3})
    for (int odd = 0; odd < 4; ++odd) {
      std::array<std::vector<std::int64_t>, 4> c{*l, *l, *l, *l};
      c[odd] = kListL0;
      p.cases.push_back(c);
    }
  return p;
}

DenominatorProfile DenominatorProfile::union_grid() {
  std::vector<std::int64_t> all = kListL0;
  for (const auto* l : {&kListL1, &kListL2, &kListL3}) append_unique(all, *l);
  DenominatorProfile p;
  p.name = "union";
  p.cases.push_back({all, all, all, all});
  return p;
}

DenominatorProfile DenominatorProfile::l0_only() {
  DenominatorProfile p;
  p.name = "L0";
  p.cases.push_back({kListL0, kListL0, kListL0, kListL0});
  return p;
}

DenominatorProfile DenominatorProfile::capped(std::int64_t max_den) {
  std::vector<std::int64_t> all{0};
  for (std::int64_t d = 1; d <= max_den; ++d) all.push_back(d);
  DenominatorProfile p;
  p.name = "cap-" + std::to_string(max_den);
  p.cases.push_back({all, all, all, all});
  return p;
}

bool DenominatorProfile::admits(const RawQuadruple& x) const {
  const std::int64_t d[4] = {x.a.folded_denominator(), x.b.folded_denominator(), x.c.folded_denominator(),
                             x.d.folded_denominator()};
  for (const auto& c : cases)
    if (contains(c[0], d[0]) && contains(c[1], d[1]) && contains(c[2], d[2]) && contains(c[3], d[3])) return true;
  return false;
}

std::vector<RawQuadruple> enumerate_candidates(const DenominatorProfile& profile) {
  std::vector<RawQuadruple> out;
  for (const auto& c : profile.cases) {
    auto as = slot_values(0, c[0]), bs = slot_values(1, c[1]), cs = slot_values(2, c[2]), ds = slot_values(3, c[3]);
    for (const auto& a : as)
      for (const auto& b : bs)
        for (const auto& cc : cs)
          for (const auto& d : ds)
            if (d <= cc) out.push_back({a, b, cc, d});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<int> rational_length(const RawQuadruple& x) {
  const RationalAngle* angles[4] = {&x.a, &x.b, &x.c, &x.d};
  bool rational[16] = {};
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<std::pair<Rational, RationalAngle>> terms;
    for (int i = 0; i < 4; ++i)
      if (mask >> i & 1) terms.emplace_back(1, *angles[i]);
    rational[mask] = CyclotomicNumber::cosine_sum(terms).is_rational();
  }
  int best = 0;
  for (unsigned mask = 1; mask < 16; ++mask) {
    if (!rational[mask]) continue;
    bool minimal = true;
    for (unsigned sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask)
      if (rational[sub]) minimal = false;
    if (minimal) best = std::max(best, __builtin_popcount(mask));
  }
  if (best == 0) return std::nullopt;
  return best;
}

bool prefilter_passes(const RawQuadruple& x, double tolerance) { return std::abs(raw_sum_double(x)) < tolerance; }

bool confirm_zero(const RawQuadruple& x, const SearchConfig& cfg) {
  return prefilter_passes(x, cfg.tolerance) && raw_sum(x).is_zero();
}

ScanResult scan_candidates(const std::vector<RawQuadruple>& candidates, double tolerance, Kernel kernel, int workers) {
  const std::size_t n = candidates.size();
  std::vector<std::uint8_t> pass(n, 0);
  if (kernel == Kernel::kSerial) {
    for (std::size_t i = 0; i < n; ++i) pass[i] = prefilter_passes(candidates[i], tolerance);
  } else {
    const std::int64_t m = static_cast<std::int64_t>(n);
#pragma omp parallel for num_threads(workers) schedule(static)
    for (std::int64_t i = 0; i < m; ++i) pass[i] = prefilter_passes(candidates[i], tolerance);
  }
  ScanResult r;
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < n; ++i) {
    if (pass[i]) survivors.push_back(i);
    else r.rejected.push_back(i);
  }
  r.prefilter_pass = survivors.size();
  std::vector<std::uint8_t> zero(survivors.size(), 0);
  if (kernel == Kernel::kSerial) {
    for (std::size_t k = 0; k < survivors.size(); ++k) zero[k] = raw_sum(candidates[survivors[k]]).is_zero();
  } else {
    const std::int64_t m = static_cast<std::int64_t>(survivors.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic, 16)
    for (std::int64_t k = 0; k < m; ++k) zero[k] = raw_sum(candidates[survivors[k]]).is_zero();
  }
  for (std::size_t k = 0; k < survivors.size(); ++k)
    if (zero[k]) r.exact_zero.push_back(survivors[k]);
  return r;
}

OrbitAccounting orbit_accounting(const std::vector<PythagoreanQuadruple>& xs) {
  OrbitAccounting o;
  o.canonical = xs.size();
  for (const auto& x : xs) {
    std::size_t pq = x.p() == x.q() ? 1 : 2;
    std::size_t rs = x.r() == x.s() ? 1 : 2;
    o.with_pq_orders += pq;
    o.with_all_orders += pq * rs;
  }
  return o;
}

const std::vector<ConwayJonesItem>& conway_jones_items() {
  static const std::vector<ConwayJonesItem> items = [] {
    auto c = [](long coeff, long n, long d) { return std::make_pair(Rational(coeff), AffineAngle(make_rational(n, d))); };
    std::vector<ConwayJonesItem> v;
    v.push_back({1, {c(1, 1, 3), c(-1, 1, 3)}, 0, false});
    v.push_back({2,
                 {{Rational(-1), AffineAngle(0, 1)},
                  {Rational(1), AffineAngle(Rational(1, 3), 1)},
                  {Rational(1), AffineAngle(Rational(-1, 3), 1)}},
                 0,
                 true});
    v.push_back({3, {c(1, 1, 5), c(-1, 2, 5), c(-1, 1, 3)}, 0, false});
    v.push_back({4, {c(1, 1, 7), c(-1, 2, 7), c(1, 3, 7), c(-1, 1, 3)}, 0, false});
    v.push_back({5, {c(1, 1, 5), c(-1, 1, 15), c(1, 4, 15), c(-1, 1, 3)}, 0, false});
    v.push_back({6, {c(-1, 2, 5), c(1, 2, 15), c(-1, 7, 15), c(-1, 1, 3)}, 0, false});
    v.push_back({7, {c(1, 1, 7), c(1, 3, 7), c(-1, 1, 21), c(1, 8, 21)}, Rational(1, 2), false});
    v.push_back({8, {c(1, 1, 7), c(-1, 2, 7), c(1, 2, 21), c(-1, 5, 21)}, Rational(1, 2), false});
    v.push_back({9, {c(-1, 2, 7), c(1, 3, 7), c(1, 4, 21), c(1, 10, 21)}, Rational(1, 2), false});
    v.push_back({10, {c(-1, 1, 15), c(1, 2, 15), c(1, 4, 15), c(-1, 7, 15)}, Rational(1, 2), false});
    return v;
  }();
  return items;
}

bool check_item(const ConwayJonesItem& item) {
  if (item.parametric) {
    TrigPolynomial s(-item.value);
    for (const auto& [coeff, arg] : item.terms) s += TrigPolynomial::cosine(arg, coeff);
    return s.is_identically_zero();
  }
  std::vector<std::pair<Rational, RationalAngle>> terms;
  for (const auto& [coeff, arg] : item.terms) terms.emplace_back(coeff, RationalAngle(arg.constant));
  return CyclotomicNumber::cosine_sum(terms, -item.value).is_zero();
}

SearchReport run_sporadic_search(const SearchConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.profile = cfg.profile.name;
  rep.tolerance = cfg.tolerance;
  rep.workers = cfg.workers;
  rep.rule = rule_name(cfg.rule);

  // Sums of rational length 4 equal the values of items 7-10 up to sign, none of which is zero.
  rep.length_four_excluded = true;
  for (const auto& item : conway_jones_items())
    if (item.number >= 7) rep.length_four_excluded = rep.length_four_excluded && check_item(item) && item.value != 0;

  auto candidates = enumerate_candidates(cfg.profile);
  rep.candidate_count = candidates.size();
  Kernel kernel = cfg.workers > 1 ? Kernel::kParallel : Kernel::kSerial;
  auto scan = scan_candidates(candidates, cfg.tolerance, kernel, cfg.workers);
  rep.prefilter_pass = scan.prefilter_pass;
  rep.exact_zero_count = scan.exact_zero.size();

  std::set<PythagoreanQuadruple> raw;
  std::map<PythagoreanQuadruple, int> length_of;
  for (auto i : scan.exact_zero) {
    auto x = abcd_to_pqrs(candidates[i]);
    if (!x) continue;
    raw.insert(*x);
    auto len = rational_length(candidates[i]);
    length_of[*x] = len.value_or(0);
  }
  rep.raw_solutions.assign(raw.begin(), raw.end());
  rep.raw_solution_count = rep.raw_solutions.size();
  rep.raw_orbits = orbit_accounting(rep.raw_solutions);

  const std::int64_t m = static_cast<std::int64_t>(rep.raw_solutions.size());
  std::vector<RealizabilityCertificate> certs(m);
#pragma omp parallel for num_threads(std::max(1, cfg.workers)) schedule(dynamic, 4)
  for (std::int64_t i = 0; i < m; ++i) certs[i] = realizability(rep.raw_solutions[i]);

  std::vector<std::size_t> realizable_idx;
  for (std::int64_t i = 0; i < m; ++i)
    if (certs[i].realizable) {
      rep.realizable.push_back(rep.raw_solutions[i]);
      realizable_idx.push_back(static_cast<std::size_t>(i));
    }
  rep.realizable_count = rep.realizable.size();
  rep.realizable_orbits = orbit_accounting(rep.realizable);

  for (auto rule : {MembershipRule::kPrintedDomain, MembershipRule::kFullLine, MembershipRule::kListedOrientation}) {
    std::size_t left = 0;
    for (const auto& x : rep.realizable)
      if (!find_family(x, rule)) ++left;
    rep.sporadic_count_by_rule[rule_name(rule)] = left;
  }

  for (std::size_t k = 0; k < rep.realizable.size(); ++k) {
    const auto& x = rep.realizable[k];
    if (auto hit = find_family(x, cfg.rule)) {
      ++rep.family_hits[hit->family_id];
      ++rep.family_member_count;
      continue;
    }
    const auto& cert = certs[realizable_idx[k]];
    SporadicEntry e{x, edge_lengths(x), volume(x), cert.g3_sign, cert.g4_sign, length_of[x]};
    ++rep.length_histogram[static_cast<std::size_t>(e.rational_length)];
    rep.sporadic.push_back(e);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

TripleReport search_triples(int workers) {
  TripleReport rep;
  auto candidates = enumerate_candidates(DenominatorProfile::union_grid());
  std::erase_if(candidates, [](const RawQuadruple& x) { return x.c != x.d; });
  auto scan = scan_candidates(candidates, 1e-8, workers > 1 ? Kernel::kParallel : Kernel::kSerial, workers);
  const RationalAngle half(1, 2), one(1, 1);
  std::set<PythagoreanTriple> sols, normal;
  for (auto i : scan.exact_zero) {
    const auto& x = candidates[i];
    RationalAngle p = (x.a + x.b).scaled(1, 2), q = (x.a - x.b).scaled(1, 2);
    if (!p.in_open_half_turn() || !q.in_open_half_turn()) continue;
    if (p == half || q == half) {
      ++rep.trivial_count;
      continue;
    }
    sols.insert({p, q, x.c});
    // orbit under (p, q, r) -> (pi - p, pi - q, r), (pi - p, q, pi - r), p <-> q
    RationalAngle np = p, nq = q, nr = x.c;
    if (np > half) {
      np = one - np;
      nr = one - nr;
    }
    if (nq > half) {
      nq = one - nq;
      nr = one - nr;
    }
    if (np < nq) std::swap(np, nq);
    normal.insert({np, nq, nr});
  }
  rep.solutions.assign(sols.begin(), sols.end());
  rep.normalized.assign(normal.begin(), normal.end());
  return rep;
}

}  // namespace rattet
