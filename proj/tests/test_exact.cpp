#include "doctest.h"
#include "mmsc/error.hpp"
#include "mmsc/exact.hpp"
#include "mmsc/oracle.hpp"
#include "mmsc/regularize.hpp"
#include "support.hpp"

using namespace mmsc;
using namespace mmsc::testing;

namespace {

void check_mms_allocation(const Instance& inst, const Allocation& alloc) {
  GuaranteeReport rep = build_report(inst, alloc, mms_values(inst), Rational(1));
  if (rep.min_ratio) CHECK(*rep.min_ratio >= 1);
}

// Some order of the type multiset where greedy prefixes reach every target.
bool path_types_feasible(const TypeProfile& p) {
  std::vector<int> seq;
  for (int r = 0; r < p.t(); ++r) seq.insert(seq.end(), p.counts[r], r);
  std::sort(seq.begin(), seq.end());
  int m = static_cast<int>(p.utilities[0].size());
  do {
    int pos = 0;
    bool ok = true;
    for (int r : seq) {
      Rational acc = 0;
      while (acc < p.targets[r] && pos < m) acc += p.utilities[r][pos++];
      ok &= acc >= p.targets[r];
    }
    if (ok) return true;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return false;
}

}  // namespace

TEST_CASE("one deviant agent") {
  Rng rng(21);
  for (int k = 0; k < 100; ++k) {
    int n = pick(rng, 1, 5);
    int m = pick(rng, 1, 10);
    GoodsGraph g = k % 2 ? GoodsGraph::cycle(m) : random_tree(rng, m);
    Instance inst = random_instance(rng, g, n, 1, pick(rng, 1, 9));
    if (n >= 2) {
      inst.agents.back() = random_row(rng, m, 9);
      inst.types.reset();
    }
    check_mms_allocation(inst, allocate_one_deviant(inst));
  }
  Instance three = fixture("three_agents.mmsc");
  CHECK_THROWS_AS(allocate_one_deviant(three), Error);
}

TEST_CASE("two agents always have an mms-allocation") {
  Rng rng(22);
  for (int k = 0; k < 100; ++k) {
    Instance inst = random_cycle(rng, pick(rng, 1, 10), 2, 0, 9);
    check_mms_allocation(inst, allocate_one_deviant(inst));
  }
}

TEST_CASE("trees and paths") {
  Rng rng(23);
  for (int k = 0; k < 150; ++k) {
    int m = pick(rng, 1, 11);
    GoodsGraph g = k % 3 ? random_tree(rng, m) : GoodsGraph::path(m);
    Instance inst = random_instance(rng, g, pick(rng, 1, 5), 0, pick(rng, 1, 9),
                                    pick(rng, 0, 3));
    check_mms_allocation(inst, allocate_tree(inst));
  }
  CHECK_THROWS_AS(allocate_tree(fixture("three_agents.mmsc")), Error);
}

TEST_CASE("fewer than 2n goods") {
  Rng rng(24);
  for (int k = 0; k < 150; ++k) {
    int n = pick(rng, 1, 6);
    Instance inst = random_cycle(rng, pick(rng, 1, 2 * n - 1), n, 0, 9,
                                 pick(rng, 0, 3));
    check_mms_allocation(inst, allocate_cycle_m_lt_2n(inst));
  }
  CHECK_THROWS_AS(allocate_cycle_m_lt_2n(fixture("three_agents.mmsc")), Error);
}

TEST_CASE("exactly 2n goods decides like the oracle") {
  CHECK_FALSE(decide_cycle_m_eq_2n(fixture("double_n4.mmsc")).has_value());
  Instance double5 = load_instance(std::string(MMSC_TEST_DATA_DIR) + "/double_n5.mmsc");
  CHECK_FALSE(decide_cycle_m_eq_2n(double5).has_value());
  Rng rng(25);
  for (int k = 0; k < 200; ++k) {
    int n = pick(rng, 1, 5);
    Instance inst = random_cycle(rng, 2 * n, n, pick(rng, 0, n), pick(rng, 1, 6));
    std::optional<Allocation> a = decide_cycle_m_eq_2n(inst);
    CHECK(a.has_value() == oracle_exists(inst).has_value());
    if (a) check_mms_allocation(inst, *a);
  }
}

TEST_CASE("three agents and at most eight goods") {
  Rng rng(26);
  for (int k = 0; k < 300; ++k) {
    Instance inst = random_cycle(rng, pick(rng, 1, 8), 3, 0, pick(rng, 1, 9),
                                 pick(rng, 0, 3));
    check_mms_allocation(inst, allocate_three_agents_small(inst));
  }
}

TEST_CASE("dp tables agree with brute force on a path") {
  Rng rng(27);
  for (int k = 0; k < 200; ++k) {
    TypeProfile p;
    int m = pick(rng, 1, 8);
    int t = pick(rng, 1, 3);
    for (int r = 0; r < t; ++r) {
      p.utilities.push_back(random_row(rng, m, 5));
      p.counts.push_back(pick(rng, 1, 2));
      p.targets.push_back(Rational(pick(rng, 0, 7)));
    }
    DpTables tables = build_dp_tables(p);
    std::optional<DpPath> path = backtrack(tables, p);
    CHECK(path.has_value() == path_types_feasible(p));
    if (!path) continue;
    std::vector<int> used(t, 0);
    int prev = 0;
    for (std::size_t b = 0; b < path->types.size(); ++b) {
      int r = path->types[b];
      ++used[r];
      CHECK(path->ranges[b].first == prev);
      prev = path->ranges[b].second;
      Rational v = 0;
      for (int x = path->ranges[b].first; x < path->ranges[b].second; ++x) {
        v += p.utilities[r][x];
      }
      CHECK(v >= p.targets[r]);
    }
    CHECK(prev == m);
    CHECK(used == p.counts);
  }
}

TEST_CASE("fixed types") {
  CHECK_FALSE(allocate_cycle_fixed_types(fixture("three_agents.mmsc")).has_value());
  CHECK_FALSE(allocate_cycle_fixed_types(fixture("two_types.mmsc")).has_value());
  Instance untyped = fixture("three_agents.mmsc");
  untyped.types.reset();
  CHECK_THROWS_AS(allocate_cycle_fixed_types(untyped), Error);
  Rng rng(28);
  for (int k = 0; k < 200; ++k) {
    int n = pick(rng, 1, 4);
    int m = pick(rng, 1, 10);
    Instance inst = random_cycle(rng, m, n, pick(rng, 1, n), pick(rng, 1, 6),
                                 pick(rng, 0, 3));
    std::optional<Allocation> a = allocate_cycle_fixed_types(inst);
    CHECK(a.has_value() == oracle_exists(inst).has_value());
    if (a) check_mms_allocation(inst, *a);
  }
}
