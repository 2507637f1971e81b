// Fixed-seed sweeps of the approximation methods over random, proportional and
// mutated hard instances. No oracle here; each allocation is checked against
// the method's own advertised factor.
#include <algorithm>

#include "doctest.h"
#include "mmsc/error.hpp"
#include "mmsc/methods.hpp"
#include "support.hpp"

using namespace mmsc;
using namespace mmsc::testing;

namespace {

const std::vector<std::string> kMethods = {"five-sixths", "three-types-34",
                                           "two-types-34", "t-types"};

int run_all(const Instance& inst) {
  int ran = 0;
  for (const std::string& name : kMethods) {
    if (method_blocker(inst, name)) continue;
    MethodOutcome out;
    CHECK_NOTHROW(out = run_method(inst, name));
    REQUIRE(out.allocation.has_value());
    CHECK(static_cast<int>(out.allocation->bundles.size()) == inst.n());
    CHECK(validate_split(inst.graph, out.allocation->bundles));
    if (out.report->min_ratio) {
      INFO(name << "\n" << serialize_instance(inst));
      CHECK(*out.report->min_ratio >= advertised_c(inst, name));
    }
    ++ran;
  }
  return ran;
}

Instance mutate(Rng& rng, Instance inst, int steps) {
  for (int s = 0; s < steps; ++s) {
    int m = inst.m();
    int op = pick(rng, 0, 5);
    std::vector<std::vector<int>> groups = identical_utility_groups(inst);
    if (op <= 2) {
      const std::vector<int>& g = groups[pick(rng, 0, static_cast<int>(groups.size()) - 1)];
      int x = pick(rng, 0, m - 1);
      int d = pick(rng, 0, 1) ? 1 : -1;
      for (int i : g) {
        Rational v = inst.agents[i][x] + d;
        inst.agents[i][x] = v < 0 ? Rational(0) : v;
      }
    } else if (op == 3) {
      int r = pick(rng, 0, m - 1);
      for (Utility& u : inst.agents) std::rotate(u.begin(), u.begin() + r, u.end());
    } else if (op == 4 && m < 20) {
      int x = pick(rng, 0, m);
      for (Utility& u : inst.agents) u.insert(u.begin() + x, Rational(0));
      inst.graph = GoodsGraph::cycle(m + 1);
    } else {
      inst = reverse_orientation(inst);
    }
  }
  inst.types.reset();
  return inst;
}

}  // namespace

TEST_CASE("random instances") {
  Rng rng(71);
  int ran = 0;
  for (int k = 0; k < 1500; ++k) {
    int n = pick(rng, 2, 6);
    int t = pick(rng, 0, 3);
    ran += run_all(random_cycle(rng, pick(rng, n, 16), n, t, pick(rng, 1, 9),
                                pick(rng, 0, 4)));
  }
  CHECK(ran > 1500);
}

TEST_CASE("proportional instances") {
  Rng rng(72);
  int ran = 0;
  for (int k = 0; k < 1500; ++k) {
    int n = pick(rng, 2, 5);
    int t = pick(rng, 0, 3);
    ran += run_all(balanced_cycle(rng, pick(rng, n, 3 * n + 3), n, t, pick(rng, 1, 6)));
  }
  CHECK(ran > 1500);
}

TEST_CASE("mutated hard instances") {
  std::vector<Instance> base = {fixture("three_agents.mmsc"), fixture("two_types.mmsc"),
                                fixture("three_types.mmsc"), fixture("double_n4.mmsc"),
                                load_instance(std::string(MMSC_TEST_DATA_DIR) +
                                              "/double_n5.mmsc")};
  Rng rng(73);
  int ran = 0;
  for (int k = 0; k < 1500; ++k) {
    const Instance& b = base[pick(rng, 0, static_cast<int>(base.size()) - 1)];
    ran += run_all(mutate(rng, b, pick(rng, 1, 6)));
  }
  CHECK(ran > 1500);
}
