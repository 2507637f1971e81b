#include "doctest.h"
#include "mmsc/error.hpp"
#include "mmsc/mms.hpp"
#include "mmsc/oracle.hpp"
#include "mmsc/regularize.hpp"
#include "support.hpp"

using namespace mmsc;
using namespace mmsc::testing;

TEST_CASE("regular agents have total n and mms one") {
  Rng rng(31);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    int n = pick(rng, 1, 5);
    int m = pick(rng, 1, 12);
    GoodsGraph g = k % 3 ? GoodsGraph::cycle(m) : random_unicyclic(rng, std::max(3, m));
    Instance inst = random_instance(rng, g, n, 0, pick(rng, 1, 9), pick(rng, 0, 3));
    if (k % 5 == 0) {
      for (Rational& v : inst.agents[0]) v /= 3;
    }
    Regularized reg = regularize(inst);
    if (reg.certificate.trivial) {
      for (const Utility& u : inst.agents) CHECK(mms(inst.graph, u, n).value == 0);
      continue;
    }
    ++checked;
    for (const Utility& u : reg.regular.agents) {
      CHECK(total_value(u) == n);
      CHECK(mms(reg.regular.graph, u, n).value == 1);
    }
    // Lowering never raises a value.
    for (int i = 0; i < n; ++i) {
      const std::vector<Integer>& s = reg.certificate.substituted[i];
      const std::vector<Integer>& r = reg.certificate.reduced[i];
      for (int x = 0; x < inst.m(); ++x) CHECK(r[x] <= s[x]);
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("pull back keeps the certified c") {
  Instance trio = fixture("three_agents.mmsc");
  Regularized reg = regularize(trio);
  REQUIRE_FALSE(reg.certificate.trivial);
  OracleMaxC best = oracle_max_c(reg.regular);
  CHECK(best.value == Rational(5, 6));
  GuaranteeReport rep = pull_back(best.witness, reg, Rational(5, 6));
  CHECK(rep.certified_c == Rational(5, 6));
  REQUIRE(rep.min_ratio.has_value());
  CHECK(*rep.min_ratio >= Rational(5, 6));
  CHECK_THROWS_AS(pull_back(best.witness, reg, Rational(1)), Error);
}

TEST_CASE("all-zero mms is trivial") {
  Instance inst = parse_instance("mmsc 1\ngraph cycle 2\nagents 3\nu 1 1\nu 0 5\nu 2 0\n");
  CHECK(regularize(inst).certificate.trivial);
  CHECK_THROWS_AS(regularize(parse_instance("mmsc 1\ngraph path 2\nagents 1\nu 1 1\n")),
                  Error);
}

TEST_CASE("mms values per agent") {
  CHECK(mms_values(fixture("three_agents.mmsc")) == std::vector<Rational>{5, 5, 6});
}
