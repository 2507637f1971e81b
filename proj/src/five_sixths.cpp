#include <algorithm>
#include <array>
#include <numeric>

#include "csuff_detail.hpp"
#include "mmsc/anchored.hpp"
#include "mmsc/csuff.hpp"
#include "mmsc/error.hpp"
#include "mmsc/matching.hpp"
#include "mmsc/regularize.hpp"

namespace mmsc {

namespace {

// Label x in 1..4 taken mod 3 onto {1,2,3}, returned 0-based.
int wrap_label(int x) { return (x - 1) % 3; }

int ceil_div(int a, int b) { return (a + b - 1) / b; }

bool in_arc(int m, const Arc& a, int g) { return arc_contains_good(m, a, g); }

}  // namespace

std::optional<ChunkGrid> chunk_grid(int m, const std::vector<Arc>& a,
                                    const std::vector<Arc>& b,
                                    const std::vector<Arc>& c) {
  require(a.size() == 3 && b.size() == 3 && c.size() == 3,
          "chunk grid needs three 3-splits");
  require(is_arc_partition(m, a) && is_arc_partition(m, b) &&
              is_arc_partition(m, c),
          "chunk grid needs arc partitions");
  GoodsGraph cycle = GoodsGraph::cycle(m);
  std::array<int, 3> pa{0, 1, 2};
  do {
    std::array<int, 3> pb{0, 1, 2};
    do {
      std::array<int, 3> pc{0, 1, 2};
      do {
        ChunkGrid grid;
        for (int l = 0; l < 3; ++l) {
          grid.a.push_back(a[pa[l]]);
          grid.b.push_back(b[pb[l]]);
          grid.c.push_back(c[pc[l]]);
        }
        grid.chunks.assign(9, Bundle{});
        bool covered = true;
        for (int g = 0; g < m && covered; ++g) {
          bool hit = false;
          for (int k = 1; k <= 9 && !hit; ++k) {
            if (in_arc(m, grid.a[wrap_label(ceil_div(k + 2, 3))], g) &&
                in_arc(m, grid.b[wrap_label(ceil_div(k + 1, 3))], g) &&
                in_arc(m, grid.c[wrap_label(ceil_div(k, 3))], g)) {
              grid.chunks[k - 1].push_back(g);
              hit = true;
            }
          }
          covered = hit;
        }
        if (!covered) continue;
        bool connected = std::all_of(
            grid.chunks.begin(), grid.chunks.end(), [&](const Bundle& ch) {
              return ch.empty() || is_connected_bundle(cycle, ch);
            });
        if (connected) return grid;
      } while (std::next_permutation(pc.begin(), pc.end()));
    } while (std::next_permutation(pb.begin(), pb.end()));
  } while (std::next_permutation(pa.begin(), pa.end()));
  return std::nullopt;
}

namespace {

struct Three {
  const Instance& r;
  int m;
  std::array<std::vector<Arc>, 3> pi;

  Rational value(int agent, const Arc& arc) const {
    return arc_value(r.agents[agent], arc);
  }
};

int third(int i, int j) { return 3 - i - j; }

Allocation from_arcs(int m, const std::array<Arc, 3>& arcs) {
  Allocation alloc;
  for (const Arc& a : arcs) alloc.bundles.push_back(arc_goods(m, a));
  return alloc;
}

// Q is a piece of X n Y with X in pi[i], Y = pi[j][y]. The rest of pi[j]
// absorbs Y - Q into a 2-split B', B'' of C - Q.
std::optional<Allocation> intersection_lemma(const Three& t, int i, int j,
                                             int y, const Arc& q,
                                             const Rational& c) {
  int m = t.m;
  int k = third(i, j);
  if (t.value(i, q) < c || q.length == m) return std::nullopt;
  const Arc& prev = t.pi[j][(y + 2) % 3];
  const Arc& next = t.pi[j][(y + 1) % 3];
  Arc left = arc_between(m, prev.start, (q.start + m - 1) % m);
  Arc right = arc_between(m, (arc_last(m, q) + 1) % m, arc_last(m, next));
  std::array<Arc, 3> out;
  int picker = i;
  if (t.value(k, q) >= c) {
    out[k] = q;
  } else {
    out[i] = q;
    picker = k;
  }
  if (t.value(picker, left) >= 1) {
    out[picker] = left;
    out[j] = right;
  } else {
    out[picker] = right;
    out[j] = left;
  }
  for (int a = 0; a < 3; ++a) {
    if (t.value(a, out[a]) < c) return std::nullopt;
  }
  return from_arcs(m, out);
}

// Two bundles of pi[i] worth c to j: the third agent picks first, then j.
std::optional<Allocation> two_bundles_lemma(const Three& t, int i, int j,
                                            const Rational& c) {
  int k = third(i, j);
  int worthy = 0;
  for (const Arc& x : t.pi[i]) worthy += t.value(j, x) >= c;
  if (worthy < 2) return std::nullopt;
  std::array<Arc, 3> out;
  std::array<char, 3> used{0, 0, 0};
  for (int s = 0; s < 3; ++s) {
    if (t.value(k, t.pi[i][s]) >= 1) {
      out[k] = t.pi[i][s];
      used[s] = 1;
      break;
    }
  }
  for (int s = 0; s < 3; ++s) {
    if (!used[s] && t.value(j, t.pi[i][s]) >= c) {
      out[j] = t.pi[i][s];
      used[s] = 1;
      break;
    }
  }
  for (int s = 0; s < 3; ++s) {
    if (!used[s]) out[i] = t.pi[i][s];
  }
  if (std::count(used.begin(), used.end(), 1) != 2) return std::nullopt;
  for (int a = 0; a < 3; ++a) {
    if (t.value(a, out[a]) < c) return std::nullopt;
  }
  return from_arcs(t.m, out);
}

std::optional<Allocation> match_split(const Three& t, int owner) {
  std::vector<std::vector<char>> allowed(3, std::vector<char>(3, 0));
  for (int a = 0; a < 3; ++a) {
    for (int s = 0; s < 3; ++s) {
      allowed[a][s] = t.value(a, t.pi[owner][s]) >= 1;
    }
  }
  std::optional<std::vector<int>> match = perfect_matching(allowed);
  if (!match) return std::nullopt;
  std::array<Arc, 3> out;
  for (int a = 0; a < 3; ++a) out[a] = t.pi[owner][(*match)[a]];
  return from_arcs(t.m, out);
}

std::optional<Allocation> any_intersection_lemma(const Three& t,
                                                 const Rational& c) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (const Arc& x : t.pi[i]) {
        for (int y = 0; y < 3; ++y) {
          for (const Arc& q : arc_intersection(t.m, x, t.pi[j][y])) {
            if (auto alloc = intersection_lemma(t, i, j, y, q, c)) {
              return alloc;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

// A piece I of X n Y worth 1 to the third agent; the path C - I is cut once
// so that i and j each get a side worth 1.
std::optional<Allocation> piece_and_two_split(const Three& t) {
  int m = t.m;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      int k = third(i, j);
      for (const Arc& x : t.pi[i]) {
        for (const Arc& y : t.pi[j]) {
          for (const Arc& piece : arc_intersection(m, x, y)) {
            if (t.value(k, piece) < 1) continue;
            int rest = m - piece.length;
            int from = (arc_last(m, piece) + 1) % m;
            for (int s = 1; s < rest; ++s) {
              Arc l = make_arc(m, from, s);
              Arc r = make_arc(m, (from + s) % m, rest - s);
              for (int swap = 0; swap < 2; ++swap) {
                int li = swap ? j : i;
                int ri = swap ? i : j;
                if (t.value(li, l) >= 1 && t.value(ri, r) >= 1) {
                  std::array<Arc, 3> out;
                  out[k] = piece;
                  out[li] = l;
                  out[ri] = r;
                  return from_arcs(m, out);
                }
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

Allocation five_sixths_regular(const Instance& r) {
  const Rational c(5, 6);
  Three t{r, r.m(), {}};
  for (int i = 0; i < 3; ++i) t.pi[i] = detail::regular_split_arcs(r.agents[i], 3);

  // Containment of a bundle in a bundle of another split.
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (const Arc& x : t.pi[i]) {
        for (int y = 0; y < 3; ++y) {
          if (!arc_subset(t.m, x, t.pi[j][y])) continue;
          if (auto alloc = intersection_lemma(t, i, j, y, x, Rational(1))) {
            alloc->provenance = "five-sixths/containment";
            return *alloc;
          }
        }
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      if (auto alloc = two_bundles_lemma(t, i, j, Rational(1))) {
        alloc->provenance = "five-sixths/two-bundles";
        return *alloc;
      }
    }
  }
  for (int owner = 0; owner < 3; ++owner) {
    if (auto alloc = match_split(t, owner)) {
      alloc->provenance = "five-sixths/matching";
      return *alloc;
    }
  }

  std::optional<ChunkGrid> grid = chunk_grid(t.m, t.pi[0], t.pi[1], t.pi[2]);
  ensure(grid.has_value(), "no relabeling turns the splits into chunks");
  for (int i = 0; i < 3; ++i) {
    int significant = 0;
    for (const Arc& x : t.pi[i]) {
      bool both = true;
      for (int a = 0; a < 3; ++a) {
        if (a != i && t.value(a, x) < 1) both = false;
      }
      significant += both;
    }
    ensure(significant == 1, "agent without a unique significant bundle");
  }

  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      if (auto alloc = two_bundles_lemma(t, i, j, c)) {
        alloc->provenance = "five-sixths/two-bundles";
        return *alloc;
      }
    }
  }
  if (auto alloc = any_intersection_lemma(t, c)) {
    alloc->provenance = "five-sixths/intersection";
    return *alloc;
  }
  if (auto alloc = piece_and_two_split(t)) {
    alloc->provenance = "five-sixths/two-chunks";
    return *alloc;
  }
  ensure(false, "5/6 construction found no allocation");
  return {};
}

}  // namespace

Allocation five_sixths_three_agents(const Instance& inst) {
  detail::require_cycle(inst, "five-sixths");
  require(inst.n() == 3, "five-sixths needs exactly three agents");
  Regularized reg = regularize(inst);
  if (reg.certificate.trivial) {
    return detail::everything_to_first(inst, "five-sixths");
  }
  Allocation alloc = five_sixths_regular(reg.regular);
  std::string provenance = alloc.provenance;
  return detail::finish(reg, std::move(alloc), Rational(5, 6), provenance);
}

}  // namespace mmsc
