#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "mmsc/anchored.hpp"
#include "mmsc/csuff.hpp"
#include "mmsc/error.hpp"
#include "mmsc/mms.hpp"
#include "mmsc/oracle.hpp"
#include "mmsc/regularize.hpp"
#include "support.hpp"

using namespace mmsc;
using namespace mmsc::testing;

namespace {

Rational min_ratio(const Instance& inst, const Allocation& alloc) {
  GuaranteeReport rep = build_report(inst, alloc, mms_values(inst), Rational(0));
  return rep.min_ratio ? *rep.min_ratio : Rational(1);
}

std::vector<Arc> split_arcs(const Utility& u, int n) {
  std::vector<Arc> arcs;
  int m = static_cast<int>(u.size());
  for (const Bundle& b : mms_cycle(u, n).split) arcs.push_back(*bundle_as_arc(m, b));
  return clockwise(arcs);
}

}  // namespace

TEST_CASE("protocol serves every agent of S") {
  Rng rng(41);
  int complete = 0;
  for (int k = 0; k < 300; ++k) {
    int n = pick(rng, 2, 6);
    int m = pick(rng, n, 14);
    Regularized reg = regularize(random_cycle(rng, m, n, 0, pick(rng, 1, 9)));
    if (reg.certificate.trivial) continue;
    const Instance& r = reg.regular;
    Rational c(pick(rng, 1, 4), 4);
    std::vector<int> path = cycle_path_order(m, pick(rng, 0, m - 1));
    int q_len = 1;
    auto worth = [&](int len) {
      for (const Utility& u : r.agents) {
        Rational v = 0;
        for (int s = 0; s < len; ++s) v += u[path[s]];
        if (v >= c) return true;
      }
      return false;
    };
    while (!worth(q_len)) ++q_len;
    std::vector<const Utility*> agents;
    for (const Utility& u : r.agents) agents.push_back(&u);
    ProtocolResult res = allocate_protocol(agents, path, q_len, c);
    for (int i = 0; i < n; ++i) {
      if (res.in_s[i]) CHECK(res.assigned[i]);
      if (res.assigned[i]) CHECK(bundle_value(r.agents[i], res.bundles[i]) >= c);
    }
    complete += res.complete();
  }
  CHECK(complete > 0);
}

TEST_CASE("strong piece count is greedy") {
  Utility u{Rational(1), Rational(1), Rational(2), Rational(1)};
  CHECK(strong_piece_count(u, {0, 1, 2, 3}, Rational(2)) == 2);
  CHECK(strong_piece_count(u, {3, 2, 1, 0}, Rational(3)) == 1);
}

TEST_CASE("psi coefficient") {
  CHECK(psi_choice(1).c == 1);
  CHECK(psi_choice(2).c == 1);
  CHECK(psi_choice(3).c == Rational(3, 4));
  CHECK(psi_choice(7).c == Rational(7, 10));
  CHECK(psi_choice(7).p == 10);
  double psi = (std::sqrt(5.0) - 1) / 2;
  for (int n = 1; n <= 60; ++n) {
    PsiChoice ch = psi_choice(n);
    CHECK(at_least_psi(ch.c));
    CHECK(ch.c.get_d() >= psi - 1e-12);
    // Brute-force maximum over d >= n (large d only lowers n/d).
    Rational best = 0;
    for (int d = n; d <= 4 * n * n; ++d) {
      Rational a = make_rational(n, d);
      int den = (n * n + d - 1) / d + n - 2;
      best = std::max(best, den <= 0 ? a : std::min(a, make_rational(n, den)));
    }
    CHECK(ch.c == best);
  }
  CHECK_FALSE(at_least_psi(Rational(61, 100)));
  CHECK(at_least_psi(Rational(62, 100)));
}

TEST_CASE("psi plan cuts p edges") {
  Rng rng(42);
  for (int k = 0; k < 100; ++k) {
    int n = pick(rng, 2, 6);
    int m = pick(rng, n, 16);
    Regularized reg = regularize(random_cycle(rng, m, n, 0, 9));
    if (reg.certificate.trivial) continue;
    PsiPlan plan = psi_plan(reg.regular);
    CHECK(static_cast<int>(plan.edges.size()) == n * n);
    CHECK(static_cast<int>(plan.removed.size()) == plan.p);
    CHECK(plan.h_hi - plan.h_lo <= 1);
    CHECK(plan.r * plan.h_hi + (plan.p - plan.r) * plan.h_lo == n * n);
    CHECK(arc_value(reg.regular.agents[n - 1], plan.q) >= plan.c);
    CHECK(is_arc_partition(m, plan.parts));
  }
}

TEST_CASE("half, psi and t-types meet their guarantees") {
  Rng rng(43);
  for (int k = 0; k < 200; ++k) {
    int n = pick(rng, 1, 7);
    Instance inst = random_cycle(rng, pick(rng, 1, 16), n, 0, pick(rng, 1, 9),
                                 pick(rng, 0, 3));
    CHECK(min_ratio(inst, half_sufficient(inst)) >= Rational(1, 2));
    CHECK(min_ratio(inst, psi_sufficient(inst)) >= psi_choice(n).c);
    int t = distinct_types(inst);
    if (t >= 4) {
      CHECK(min_ratio(inst, t_over_2t2_sufficient(inst)) >= t_types_coefficient(t));
    }
  }
  CHECK(t_types_coefficient(4) == Rational(2, 3));
  CHECK_THROWS_AS(t_over_2t2_sufficient(fixture("three_agents.mmsc")), Error);
}

TEST_CASE("three quarters on the hard fixtures") {
  CHECK(min_ratio(fixture("two_types.mmsc"), three_quarters_two_types(fixture("two_types.mmsc"))) ==
        Rational(3, 4));
  CHECK(min_ratio(fixture("double_n4.mmsc"),
                  three_quarters_two_types(fixture("double_n4.mmsc"))) >= Rational(3, 4));
  for (const char* f : {"three_agents.mmsc", "two_types.mmsc", "three_types.mmsc"}) {
    Instance inst = fixture(f);
    CHECK(min_ratio(inst, three_quarters_three_types(inst)) >= Rational(3, 4));
  }
  CHECK_THROWS_AS(three_quarters_two_types(fixture("three_agents.mmsc")), Error);
}

TEST_CASE("five sixths on trio") {
  Instance trio = fixture("three_agents.mmsc");
  Allocation a = five_sixths_three_agents(trio);
  CHECK(min_ratio(trio, a) >= Rational(5, 6));
  CHECK_THROWS_AS(five_sixths_three_agents(fixture("two_types.mmsc")), Error);
}

TEST_CASE("chunks of interleaved splits") {
  int m = 9;
  std::vector<Arc> a{make_arc(m, 0, 3), make_arc(m, 3, 3), make_arc(m, 6, 3)};
  std::vector<Arc> b{make_arc(m, 1, 3), make_arc(m, 4, 3), make_arc(m, 7, 3)};
  std::vector<Arc> c{make_arc(m, 2, 3), make_arc(m, 5, 3), make_arc(m, 8, 3)};
  std::optional<ChunkGrid> grid = chunk_grid(m, a, b, c);
  REQUIRE(grid.has_value());
  int goods = 0;
  for (const Bundle& ch : grid->chunks) {
    CHECK(ch.size() == 1);
    goods += static_cast<int>(ch.size());
  }
  CHECK(goods == m);
  // Chunk 1 lies in A_1, B_1 and C_1.
  int g = grid->chunks[0][0];
  CHECK(arc_contains_good(m, grid->a[0], g));
  CHECK(arc_contains_good(m, grid->b[0], g));
  CHECK(arc_contains_good(m, grid->c[0], g));
}

TEST_CASE("chunks exist for interleaved cuts") {
  Rng rng(44);
  for (int k = 0; k < 500; ++k) {
    int m = pick(rng, 9, 20);
    std::vector<int> cuts(m);
    std::iota(cuts.begin(), cuts.end(), 0);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(9);
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::vector<Arc>> s(3);
    for (int i = 0; i < 9; ++i) {
      int from = cuts[i];
      int to = cuts[(i + 3) % 9];
      s[i % 3].push_back(make_arc(m, from, (to - from + m) % m));
    }
    bool contained = false;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        for (const Arc& x : s[i]) {
          for (const Arc& y : s[j]) contained |= arc_subset(m, x, y);
        }
      }
    }
    CHECK_FALSE(contained);
    std::shuffle(s.begin(), s.end(), rng);
    CHECK(chunk_grid(m, s[0], s[1], s[2]).has_value());
  }
}

TEST_CASE("lemma on an intersection piece") {
  Instance duo = fixture("two_types.mmsc");
  Regularized reg = regularize(duo);
  const Instance& r = reg.regular;
  std::vector<Arc> a = split_arcs(r.agents[0], r.n());
  std::vector<Arc> b = split_arcs(r.agents[3], r.n());
  bool used = false;
  for (const Arc& x : a) {
    for (const Arc& y : b) {
      for (const Arc& q : arc_intersection(r.m(), x, y)) {
        for (const Utility& u : r.agents) {
          if (used || arc_value(u, q) < Rational(3, 4)) continue;
          Allocation alloc = lemma_intersection(r, q, Rational(3, 4));
          for (int i = 0; i < r.n(); ++i) {
            CHECK(bundle_value(r.agents[i], alloc.bundles[i]) >= Rational(3, 4));
          }
          used = true;
        }
      }
    }
  }
  CHECK(used);
}
