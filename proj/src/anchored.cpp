#include "mmsc/anchored.hpp"

#include <algorithm>

#include "mmsc/error.hpp"

namespace mmsc {

const Arc& AnchoredSplit::at(int i) const {
  int k = n();
  return arcs[((i % k) + k) % k];
}

int AnchoredSplit::prefix_end(int i) const {
  int last = arc_last(m, at(i));
  return ((last - anchor) % m + m) % m;
}

Arc AnchoredSplit::prefix_set(int i) const {
  return make_arc(m, anchor, prefix_end(i) + 1);
}

std::vector<Arc> clockwise(std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.start < b.start; });
  return arcs;
}

bool is_arc_partition(int m, const std::vector<Arc>& arcs) {
  std::vector<int> hits(m, 0);
  for (const Arc& a : arcs) {
    if (a.empty() || a.length > m) return false;
    for (int k = 0; k < a.length; ++k) ++hits[(a.start + k) % m];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

AnchoredSplit anchor_split(int m, std::vector<Arc> arcs, int anchor) {
  require(is_arc_partition(m, arcs),
          "anchored split needs non-empty arcs covering the cycle");
  require(anchor >= 0 && anchor < m, "anchor out of range");
  arcs = clockwise(std::move(arcs));
  auto first = std::find_if(arcs.begin(), arcs.end(), [&](const Arc& a) {
    return arc_contains_good(m, a, anchor);
  });
  std::rotate(arcs.begin(), first, arcs.end());
  return {m, anchor, std::move(arcs)};
}

std::vector<char> jump_table(const AnchoredSplit& x, const AnchoredSplit& y) {
  require(x.m == y.m && x.anchor == y.anchor,
          "jump table needs splits with the same anchor");
  require(x.n() == y.n(), "jump table needs splits of equal size");
  std::vector<char> flags(x.n());
  for (int i = 0; i < x.n(); ++i) {
    flags[i] = x.prefix_end(i) <= y.prefix_end(i);
  }
  return flags;
}

bool useful_sequence_check(const AnchoredSplit& x, const AnchoredSplit& y,
                           const std::vector<Source>& z) {
  int n = x.n();
  require(static_cast<int>(z.size()) == n, "sequence length");
  std::vector<char> jx = jump_table(x, y);
  std::vector<char> jy = jump_table(y, x);
  for (int i = 0; i < n; ++i) {
    int next = (i + 1) % n;
    bool ok = (z[i] == z[next]) ||
              (z[i] == Source::kX && jx[i]) ||
              (z[i] == Source::kY && jy[i]);
    if (!ok) return false;
  }
  return true;
}

std::vector<Arc> sequence_sets(const AnchoredSplit& x, const AnchoredSplit& y,
                               const std::vector<Source>& z) {
  std::vector<Arc> out;
  for (int i = 0; i < x.n(); ++i) {
    out.push_back(z[i] == Source::kX ? x.at(i) : y.at(i));
  }
  return out;
}

namespace {

bool inside_union(int m, const Arc& a, const Arc& b, const Arc& c) {
  for (int k = 0; k < a.length; ++k) {
    int g = (a.start + k) % m;
    if (!arc_contains_good(m, b, g) && !arc_contains_good(m, c, g)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool proper_relative(int m, const std::vector<Arc>& x,
                     const std::vector<Arc>& y) {
  for (const Arc& a : x) {
    for (const Arc& b : y) {
      if (arc_subset(m, a, b) || arc_subset(m, b, a)) return false;
    }
  }
  return true;
}

ProperRelation proper_relative(const AnchoredSplit& x, const AnchoredSplit& y) {
  ProperRelation rel;
  rel.proper = proper_relative(x.m, x.arcs, y.arcs);
  if (!rel.proper) return rel;
  for (int phase = 0; phase < 2; ++phase) {
    bool all = true;
    for (int i = 0; i < x.n() && all; ++i) {
      all = phase == 0 ? inside_union(x.m, x.at(i), y.at(i), y.at(i + 1))
                       : inside_union(x.m, x.at(i), y.at(i - 1), y.at(i));
    }
    if (all) {
      rel.phase = phase;
      return rel;
    }
  }
  ensure(false, "proper splits fit neither phase");
  return rel;
}

std::vector<Arc> align_after(int m, const std::vector<Arc>& x,
                             const std::vector<Arc>& y) {
  int n = static_cast<int>(x.size());
  for (int s = 0; s < n; ++s) {
    bool all = true;
    for (int i = 0; i < n && all; ++i) {
      all = inside_union(m, x[i], y[(i + s) % n], y[(i + s + 1) % n]);
    }
    if (all) {
      std::vector<Arc> out;
      for (int i = 0; i < n; ++i) out.push_back(y[(i + s) % n]);
      return out;
    }
  }
  ensure(false, "no rotation aligns the splits");
  return {};
}

bool acceptable(const Utility& u, const Arc& arc) {
  return arc_value(u, arc) >= Rational(3, 4);
}

std::vector<int> every_second_acceptable(const AnchoredSplit& x,
                                         const AnchoredSplit& y,
                                         const Utility& uy) {
  require(proper_relative(x, y).proper,
          "splits are not proper relative to each other");
  for (const Arc& b : y.arcs) {
    require(arc_value(uy, b) == 1, "y is not a regular agent's mms split");
  }
  for (const Arc& a : x.arcs) {
    for (const Arc& b : y.arcs) {
      for (const Arc& piece : arc_intersection(x.m, a, b)) {
        require(!acceptable(uy, piece), "some intersection is acceptable");
      }
    }
  }
  std::vector<int> witness;
  for (int i = 0; i < x.n(); ++i) {
    if (acceptable(uy, x.at(i))) {
      witness.push_back(i);
    } else {
      ensure(acceptable(uy, x.at(i + 1)), "two consecutive sets unacceptable");
      witness.push_back((i + 1) % x.n());
    }
  }
  return witness;
}

}  // namespace mmsc
