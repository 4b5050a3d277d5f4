#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "oracle.hpp"
#include "rattet/fixtures.hpp"
#include "rattet/search.hpp"

using namespace rattet;

namespace {

RawQuadruple raw(std::int64_t an, std::int64_t ad, std::int64_t bn, std::int64_t bd, std::int64_t cn, std::int64_t cd,
                 std::int64_t dn, std::int64_t dd) {
  return {{an, ad}, {bn, bd}, {cn, cd}, {dn, dd}};
}

// Second count of the published grid: every point of the dense union grid, filtered by the case rules.
std::size_t count_by_filter(const DenominatorProfile& profile) {
  std::vector<std::int64_t> dens{1, 2, 3, 5, 7, 15};
  auto values = [&](std::int64_t lo_num, std::int64_t hi_turns) {
    std::set<RationalAngle> v;
    for (auto d : dens)
      for (std::int64_t n = lo_num; n < hi_turns * d; ++n) v.insert(RationalAngle(n, d));
    return std::vector<RationalAngle>(v.begin(), v.end());
  };
  auto as = values(1, 2), bs = values(0, 1), cs = values(1, 1);
  std::size_t n = 0;
  for (const auto& a : as)
    for (const auto& b : bs)
      for (const auto& c : cs)
        for (const auto& d : cs)
          if (d <= c && profile.admits({a, b, c, d})) ++n;
  return n;
}

SearchConfig config(int workers) {
  SearchConfig cfg;
  cfg.workers = workers;
  return cfg;
}

}  // namespace

TEST_CASE("denominator lists") {
  CHECK(kListL0 == std::vector<std::int64_t>{0, 1, 2, 3});
  CHECK(kListL1 == std::vector<std::int64_t>{3, 5});
  CHECK(kListL2 == std::vector<std::int64_t>{3, 7});
  CHECK(kListL3 == std::vector<std::int64_t>{3, 5, 15});
}

TEST_CASE("candidate counts agree with an independent filter count") {
  auto pub = DenominatorProfile::published();
  auto cands = enumerate_candidates(pub);
  CHECK(cands.size() == 41382);
  CHECK(cands.size() == count_by_filter(pub));
  auto l0 = enumerate_candidates(DenominatorProfile::l0_only());
  CHECK(l0.size() == 168);
  CHECK(l0.size() == count_by_filter(DenominatorProfile::l0_only()));
  CHECK(enumerate_candidates(DenominatorProfile::union_grid()).size() ==
        count_by_filter(DenominatorProfile::union_grid()));
  // no repeats; ranges respected
  CHECK(std::set<RawQuadruple>(cands.begin(), cands.end()).size() == cands.size());
  for (const auto& x : cands) {
    CHECK(x.a.strictly_between({0, 1}, {2, 1}));
    CHECK(!x.b.is_zero() ? x.b.strictly_between({0, 1}, {1, 1}) : true);
    CHECK(x.c.strictly_between({0, 1}, {1, 1}));
    CHECK(x.d.strictly_between({0, 1}, {1, 1}));
    CHECK(x.d <= x.c);
  }
}

TEST_CASE("rational length examples") {
  CHECK(rational_length(raw(1, 3, 2, 3, 1, 2, 1, 2)) == 1);
  CHECK(rational_length(raw(1, 5, 3, 5, 2, 3, 1, 2)) == 2);
  CHECK(rational_length(raw(1, 7, 5, 7, 3, 7, 2, 3)) == 3);
  // cos(pi/7) + cos(5pi/7) + cos(4pi/7) is irrational and no pair is rational
  CHECK(rational_length(raw(1, 7, 5, 7, 4, 7, 2, 3)) == 1);
  CHECK(!rational_length(raw(1, 7, 1, 9, 1, 5, 1, 9)));
}

TEST_CASE("length four never sums to zero: items 7 to 10 are 1/2") {
  for (const auto& item : conway_jones_items())
    if (item.number >= 7) {
      CHECK(item.value == Rational(1, 2));
      CHECK(check_item(item));
    }
}

TEST_CASE("confirm_zero examples") {
  SearchConfig cfg;
  CHECK(confirm_zero(raw(3, 5, 1, 5, 2, 3, 1, 2), cfg));
  CHECK(!confirm_zero(raw(1, 3, 1, 3, 1, 3, 1, 3), cfg));
  CHECK(confirm_zero(raw(1, 5, 3, 5, 2, 3, 1, 2), cfg));
}

TEST_CASE("serial and parallel kernels agree; rejected candidates are never exact zeros") {
  auto cands = enumerate_candidates(DenominatorProfile::published());
  auto s = scan_candidates(cands, 1e-8, Kernel::kSerial, 1);
  auto p = scan_candidates(cands, 1e-8, Kernel::kParallel, 4);
  CHECK(s.prefilter_pass == p.prefilter_pass);
  CHECK(s.exact_zero == p.exact_zero);
  CHECK(s.rejected == p.rejected);
  CHECK(s.rejected.size() + s.prefilter_pass == cands.size());
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, s.rejected.size() - 1);
  for (int i = 0; i < 1000; ++i) CHECK(!raw_sum(cands[s.rejected[pick(rng)]]).is_zero());
}

TEST_CASE("full search reproduces the reference table and is independent of the worker count") {
  auto a = run_sporadic_search(config(1));
  auto b = run_sporadic_search(config(4));
  CHECK(a.raw_solutions == b.raw_solutions);
  CHECK(a.realizable == b.realizable);
  REQUIRE(a.sporadic.size() == b.sporadic.size());
  for (std::size_t i = 0; i < a.sporadic.size(); ++i) CHECK(a.sporadic[i].quadruple == b.sporadic[i].quadruple);

  CHECK(a.raw_solution_count >= a.realizable_count);
  CHECK(a.realizable_count >= a.sporadic.size());
  CHECK(a.sporadic.size() == 59);
  CHECK(a.sporadic_count_by_rule.at("listed-orientation") == 59);

  std::set<std::tuple<PythagoreanQuadruple, EdgeLengths, std::string>> got, want;
  for (const auto& e : a.sporadic) {
    CHECK(quadruple_residual(e.quadruple).is_zero());
    CHECK(is_realizable(e.quadruple));
    CHECK(e.volume.value > 0);
    got.insert({e.quadruple, e.lengths, e.volume.value.get_str()});
  }
  for (const auto& r : reference_sporadic_rows())
    want.insert({PythagoreanQuadruple(r.angles[0], r.angles[1], r.angles[2], r.angles[3]),
                 EdgeLengths{r.lengths[0], r.lengths[1], r.lengths[2], r.lengths[3]}, r.volume.get_str()});
  CHECK(got == want);
  for (const auto& x : a.realizable) CHECK(volume(x).value > 0);
}

TEST_CASE("orbit accounting") {
  std::vector<PythagoreanQuadruple> xs{{{1, 2}, {1, 2}, {1, 2}, {1, 2}}, {{2, 3}, {1, 3}, {3, 5}, {1, 5}},
                                       {{2, 3}, {2, 3}, {4, 5}, {2, 5}}};
  auto o = orbit_accounting(xs);
  CHECK(o.canonical == 3);
  CHECK(o.with_pq_orders == 1 + 2 + 1);
  CHECK(o.with_all_orders == 1 + 4 + 2);
}

TEST_CASE("the triple search returns one non-trivial orbit") {
  auto rep = search_triples(2);
  PythagoreanTriple smith{{1, 4}, {1, 4}, {2, 3}};
  CHECK(rep.normalized == std::vector<PythagoreanTriple>{smith});
  CHECK(std::find(rep.solutions.begin(), rep.solutions.end(), smith) != rep.solutions.end());
  CHECK(rep.trivial_count > 0);
  for (const auto& t : rep.solutions) {
    CHECK(triple_residual(t.p, t.q, t.r).is_zero());
    CHECK(t.p != RationalAngle(1, 2));
    CHECK(t.q != RationalAngle(1, 2));
    CHECK(t.p.den() % 7 != 0);
    CHECK(t.q.den() % 7 != 0);
    CHECK(t.r.den() % 7 != 0);
  }
}
