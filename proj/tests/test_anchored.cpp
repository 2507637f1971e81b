#include "doctest.h"
#include "mmsc/anchored.hpp"
#include "mmsc/error.hpp"
#include "mmsc/mms.hpp"
#include "mmsc/regularize.hpp"
#include "support.hpp"

using namespace mmsc;
using namespace mmsc::testing;

namespace {

struct Pair {
  int m;
  AnchoredSplit x, y;
};

Pair random_pair(Rng& rng) {
  int m = pick(rng, 2, 12);
  int n = pick(rng, 2, std::min(m, 6));
  int anchor = pick(rng, 0, m - 1);
  return {m, anchor_split(m, random_arc_split(rng, m, n), anchor),
          anchor_split(m, random_arc_split(rng, m, n), anchor)};
}

}  // namespace

TEST_CASE("anchoring puts the anchor in the first arc") {
  std::vector<Arc> arcs{make_arc(8, 6, 3), make_arc(8, 1, 2), make_arc(8, 3, 3)};
  AnchoredSplit s = anchor_split(8, arcs, 4);
  CHECK(s.arcs[0] == make_arc(8, 3, 3));
  CHECK(s.arcs[1] == make_arc(8, 6, 3));
  CHECK(s.at(3) == s.arcs[0]);
  CHECK(s.prefix_end(0) == 1);
  CHECK(s.prefix_set(1) == make_arc(8, 4, 5));
  CHECK_THROWS_AS(anchor_split(8, {make_arc(8, 0, 4)}, 0), Error);
}

TEST_CASE("prefix sets grow to the whole cycle") {
  Rng rng(51);
  for (int k = 0; k < 500; ++k) {
    Pair p = random_pair(rng);
    const AnchoredSplit& x = p.x;
    for (int i = 0; i + 1 < x.n(); ++i) {
      CHECK(arc_subset(p.m, x.prefix_set(i), x.prefix_set(i + 1)));
      CHECK(x.prefix_set(i).length < x.prefix_set(i + 1).length);
    }
    // The last prefix set misses only the part of X_1 before the anchor.
    Bundle all = arc_goods(p.m, x.prefix_set(x.n() - 1));
    Bundle first = arc_goods(p.m, x.arcs[0]);
    all.insert(all.end(), first.begin(), first.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    CHECK(static_cast<int>(all.size()) == p.m);
  }
}

TEST_CASE("some member of every index pair is a jump") {
  Rng rng(52);
  for (int k = 0; k < 1000; ++k) {
    Pair p = random_pair(rng);
    std::vector<char> jx = jump_table(p.x, p.y);
    std::vector<char> jy = jump_table(p.y, p.x);
    for (int i = 0; i < p.x.n(); ++i) {
      CHECK((jx[i] || jy[i]));
      // A jump followed by a non-jump forces containment the other way.
      if (i + 1 < p.x.n() && jx[i] && !jx[i + 1]) {
        CHECK(arc_subset(p.m, p.y.arcs[i + 1], p.x.arcs[i + 1]));
        CHECK(jy[i + 1]);
      }
    }
  }
}

TEST_CASE("useful sequences are pairwise disjoint") {
  Rng rng(53);
  int useful = 0;
  for (int k = 0; k < 1000; ++k) {
    Pair p = random_pair(rng);
    int n = p.x.n();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<Source> z;
      for (int i = 0; i < n; ++i) z.push_back((mask >> i) & 1 ? Source::kY : Source::kX);
      if (!useful_sequence_check(p.x, p.y, z)) continue;
      ++useful;
      std::vector<Arc> sets = sequence_sets(p.x, p.y, z);
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          CHECK(arc_intersection(p.m, sets[a], sets[b]).empty());
        }
      }
    }
    // All-X and all-Y are always useful.
    CHECK(useful_sequence_check(p.x, p.y, std::vector<Source>(n, Source::kX)));
    CHECK(useful_sequence_check(p.x, p.y, std::vector<Source>(n, Source::kY)));
  }
  CHECK(useful > 2000);
}

TEST_CASE("proper relative splits align") {
  Rng rng(54);
  int proper = 0;
  for (int k = 0; k < 1000; ++k) {
    int m = pick(rng, 4, 12);
    int n = pick(rng, 2, m / 2);
    std::vector<Arc> x = random_arc_split(rng, m, n);
    std::vector<Arc> y = random_arc_split(rng, m, n);
    bool contained = false;
    for (const Arc& a : x) {
      for (const Arc& b : y) contained |= arc_subset(m, a, b) || arc_subset(m, b, a);
    }
    CHECK(proper_relative(m, x, y) == !contained);
    if (contained) continue;
    ++proper;
    std::vector<Arc> ya = align_after(m, x, y);
    for (int i = 0; i < n; ++i) {
      Bundle both = arc_goods(m, ya[i]);
      Bundle next = arc_goods(m, ya[(i + 1) % n]);
      both.insert(both.end(), next.begin(), next.end());
      std::sort(both.begin(), both.end());
      for (int g : arc_goods(m, x[i])) {
        CHECK(std::binary_search(both.begin(), both.end(), g));
      }
    }
  }
  CHECK(proper > 30);
}

TEST_CASE("acceptable means three quarters") {
  Utility u{Rational(1, 2), Rational(1, 4), Rational(1, 4)};
  CHECK(acceptable(u, make_arc(3, 0, 2)));
  CHECK_FALSE(acceptable(u, make_arc(3, 1, 2)));
}

TEST_CASE("every second set is acceptable") {
  Rng rng(55);
  int applied = 0;
  for (int k = 0; k < 3000 && applied < 50; ++k) {
    int n = pick(rng, 2, 5);
    int m = pick(rng, 2 * n, 3 * n + 3);
    Instance inst = balanced_cycle(rng, m, n, 2, pick(rng, 2, 6));
    Regularized reg = regularize(inst);
    if (reg.certificate.trivial) continue;
    const Instance& r = reg.regular;
    auto arcs_of = [&](const Utility& u) {
      std::vector<Arc> out;
      for (const Bundle& b : mms_cycle(u, n).split) out.push_back(*bundle_as_arc(m, b));
      return clockwise(out);
    };
    std::vector<Arc> x = arcs_of(r.agents[0]);
    std::vector<Arc> y = arcs_of(r.agents[1]);
    if (!proper_relative(m, x, y)) continue;
    bool piece = false;
    for (const Arc& a : x) {
      for (const Arc& b : y) {
        for (const Arc& q : arc_intersection(m, a, b)) piece |= acceptable(r.agents[1], q);
      }
    }
    if (piece) continue;
    bool exact = true;
    for (const Arc& b : y) exact &= arc_value(r.agents[1], b) == 1;
    if (!exact) continue;
    AnchoredSplit ax = anchor_split(m, x, x[0].start);
    AnchoredSplit ay = anchor_split(m, y, x[0].start);
    std::vector<int> w = every_second_acceptable(ax, ay, r.agents[1]);
    CHECK(static_cast<int>(w.size()) == n);
    for (int i = 0; i < n; ++i) {
      CHECK((w[i] == i || w[i] == (i + 1) % n));
      CHECK(acceptable(r.agents[1], ax.at(w[i])));
    }
    ++applied;
  }
  CHECK(applied > 0);
}
