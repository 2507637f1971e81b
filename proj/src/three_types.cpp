#include <algorithm>
#include <functional>
#include <tuple>

#include "csuff_detail.hpp"
#include "mmsc/anchored.hpp"
#include "mmsc/csuff.hpp"
#include "mmsc/error.hpp"

namespace mmsc {
namespace {

const Rational kThreeQuarters(3, 4);

// Three type groups (largest first) with their mms splits, possibly seen in
// the mirrored orientation.
struct Frame {
  Instance inst;
  bool mirrored = false;
  int m = 0;
  int n = 0;
  std::vector<std::vector<int>> groups;
  int n1 = 0, n2 = 0, n3 = 0;
  std::vector<Arc> a, b, c;

  const Utility& type(int t) const { return inst.agents[groups[t][0]]; }
};

Frame make_frame(const Instance& regular) {
  Frame f;
  f.inst = regular;
  f.m = regular.m();
  f.n = regular.n();
  f.groups = detail::sorted_groups(regular);
  ensure(f.groups.size() == 3, "frame needs three types");
  f.n1 = static_cast<int>(f.groups[0].size());
  f.n2 = static_cast<int>(f.groups[1].size());
  f.n3 = static_cast<int>(f.groups[2].size());
  f.a = detail::regular_split_arcs(f.type(0), f.n);
  f.b = detail::regular_split_arcs(f.type(1), f.n);
  f.c = detail::regular_split_arcs(f.type(2), f.n);
  return f;
}

std::vector<Arc> reflect(int m, const std::vector<Arc>& arcs) {
  std::vector<Arc> out;
  for (const Arc& x : arcs) out.push_back(reverse_arc(m, x));
  return clockwise(std::move(out));
}

Frame mirror(const Frame& f) {
  Frame g = f;
  g.inst = reverse_orientation(f.inst);
  g.mirrored = !f.mirrored;
  g.a = reflect(f.m, f.a);
  g.b = reflect(f.m, f.b);
  g.c = reflect(f.m, f.c);
  return g;
}

Allocation in_original(const Frame& f, Allocation alloc,
                       const std::string& name) {
  if (f.mirrored) {
    for (Bundle& b : alloc.bundles) {
      for (int& g : b) g = f.m - 1 - g;
      std::sort(b.begin(), b.end());
    }
  }
  alloc.provenance = name;
  return alloc;
}

using Result = std::optional<Allocation>;

Result try_family(const Frame& f, const std::vector<Arc>& family,
                  const std::string& name) {
  Result alloc = detail::assemble_family(f.inst, family, kThreeQuarters);
  if (!alloc) return std::nullopt;
  return in_original(f, std::move(*alloc), name);
}

// x[i], taken cyclically.
const Arc& at(const std::vector<Arc>& x, int i) {
  int n = static_cast<int>(x.size());
  return x[((i % n) + n) % n];
}

void append_run(std::vector<Arc>& out, const std::vector<Arc>& x, int from,
                int count) {
  for (int k = 0; k < count; ++k) out.push_back(at(x, from + k));
}

bool inside(int m, const Arc& small, const std::vector<Arc>& parts) {
  for (int k = 0; k < small.length; ++k) {
    int g = (small.start + k) % m;
    bool hit = std::any_of(parts.begin(), parts.end(), [&](const Arc& p) {
      return arc_contains_good(m, p, g);
    });
    if (!hit) return false;
  }
  return true;
}

bool some_contained(int m, const std::vector<Arc>& small,
                    const std::vector<Arc>& big) {
  for (const Arc& x : small) {
    for (const Arc& y : big) {
      if (arc_subset(m, x, y)) return true;
    }
  }
  return false;
}

// Some connected piece of x_i n y_j is acceptable to u.
bool piece_acceptable(int m, const std::vector<Arc>& x,
                      const std::vector<Arc>& y, const Utility& u) {
  for (const Arc& p : x) {
    for (const Arc& q : y) {
      for (const Arc& piece : arc_intersection(m, p, q)) {
        if (acceptable(u, piece)) return true;
      }
    }
  }
  return false;
}

// Goods of the C-sets lying inside some set of `big`.
std::vector<int> anchors_in_contained(const Frame& f,
                                      const std::vector<Arc>& big) {
  std::vector<int> out;
  for (const Arc& y : f.c) {
    for (const Arc& x : big) {
      if (!arc_subset(f.m, y, x)) continue;
      for (int k = 0; k < y.length; ++k) out.push_back((y.start + k) % f.m);
    }
  }
  return out;
}

// Ranges are 1-based and inclusive; an empty range has to < from.
using Range = std::tuple<Source, int, int>;

std::optional<std::vector<Source>> sequence(int n,
                                            const std::vector<Range>& ranges) {
  std::vector<int> seen(n, 0);
  std::vector<Source> z(n, Source::kX);
  for (const auto& [src, from, to] : ranges) {
    for (int i = from; i <= to; ++i) {
      if (i < 1 || i > n || seen[i - 1]++) return std::nullopt;
      z[i - 1] = src;
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != n) return std::nullopt;
  return z;
}

Result try_useful(const Frame& f, const AnchoredSplit& x,
                  const AnchoredSplit& y, const std::vector<Range>& ranges,
                  const std::string& name) {
  std::optional<std::vector<Source>> z = sequence(x.n(), ranges);
  if (!z || !useful_sequence_check(x, y, *z)) return std::nullopt;
  std::vector<Arc> sets = sequence_sets(x, y, *z);
  ensure(is_arc_partition(f.m, sets) ||
             [&] {
               std::vector<int> hits(f.m, 0);
               for (const Arc& s : sets) {
                 for (int k = 0; k < s.length; ++k) {
                   if (hits[(s.start + k) % f.m]++) return false;
                 }
               }
               return true;
             }(),
         "useful sequence with overlapping sets");
  return try_family(f, sets, name);
}

bool jump(const std::vector<char>& flags, int i) {
  int n = static_cast<int>(flags.size());
  return flags[(((i - 1) % n) + n) % n] != 0;
}

// Largest i in [lo, hi) with a jump, 0 if none.
int last_jump(const std::vector<char>& flags, int lo, int hi) {
  for (int i = hi - 1; i >= lo; --i) {
    if (jump(flags, i)) return i;
  }
  return 0;
}

// Smallest i in (lo, hi] with a jump, else hi.
int first_jump_or(const std::vector<char>& flags, int lo, int hi) {
  for (int i = lo + 1; i <= hi; ++i) {
    if (jump(flags, i)) return i;
  }
  return hi;
}

// ---- the lemma for n1 == n2 -------------------------------------------

// x plays the A-role (contains a C-set), y the B-role.
struct Roles {
  const std::vector<Arc>* x;
  const std::vector<Arc>* y;
  int y_type;
};

Roles roles(const Frame& f, bool swap) {
  return swap ? Roles{&f.b, &f.a, 0} : Roles{&f.a, &f.b, 1};
}

Result equal_case1(const Frame& f, bool swap, const std::string& name) {
  Roles r = roles(f, swap);
  int n = f.n;
  int n1 = f.n1;
  int n3 = f.n3;
  for (int a : anchors_in_contained(f, *r.x)) {
    AnchoredSplit xa = anchor_split(f.m, *r.x, a);
    AnchoredSplit ca = anchor_split(f.m, f.c, a);
    std::vector<char> ja = jump_table(xa, ca);
    std::vector<char> jc = jump_table(ca, xa);
    bool all = std::all_of(ja.begin(), ja.end(), [](char j) { return j; });
    if (all) {
      Result res = try_useful(
          f, xa, ca,
          {{Source::kY, 1, 1}, {Source::kX, 2, 2 * n1 + 1},
           {Source::kY, 2 * n1 + 2, n}},
          name);
      if (res) return res;
      continue;
    }
    if (!jump(ja, n - 1) || !jump(ja, n) || jump(ja, 1)) continue;
    Result res;
    if (jump(jc, n3)) {
      res = try_useful(f, xa, ca,
                       {{Source::kY, 1, n3}, {Source::kX, n3 + 1, n}}, name);
    } else if (n3 >= 2 && jump(jc, n3 - 1)) {
      res = try_useful(f, xa, ca,
                       {{Source::kY, n, n},
                        {Source::kY, 1, n3 - 1},
                        {Source::kX, n3, n - 1}},
                       name);
    } else {
      int k = last_jump(jc, 1, n3 - 1);
      int l = first_jump_or(jc, n3, n);
      if (k >= 1 && (n - l) % 2 == 0) {
        res = try_useful(f, xa, ca,
                         {{Source::kY, 1, k},
                          {Source::kX, k + 1, l - (n3 - k)},
                          {Source::kY, l - (n3 - k) + 1, l},
                          {Source::kX, l + 1, n}},
                         name);
      } else if (k >= 1) {
        int lp = first_jump_or(jc, n3, n - 1);
        res = try_useful(f, xa, ca,
                         {{Source::kY, n, n},
                          {Source::kY, 1, k},
                          {Source::kX, k + 1, lp - (n3 - k) + 1},
                          {Source::kY, lp - (n3 - k) + 2, lp},
                          {Source::kX, lp + 1, n - 1}},
                         name);
      }
    }
    if (res) return res;
  }
  return std::nullopt;
}

Result equal_case3(const Frame& f, bool swap, const std::string& name) {
  Roles r = roles(f, swap);
  int n = f.n;
  int n1 = f.n1;
  int n3 = f.n3;
  const Utility& uy = f.type(r.y_type);
  if (proper_relative(f.m, *r.y, f.c)) {
    std::vector<Arc> d = align_after(f.m, *r.y, f.c);
    const std::vector<Arc>& y = *r.y;
    for (int i = 0; i < n; ++i) {
      // Piece at the start of y_i, then at its end.
      for (int side = 0; side < 2; ++side) {
        const Arc& cover = side == 0 ? at(d, i) : at(d, i + 1);
        for (const Arc& piece : arc_intersection(f.m, at(y, i), cover)) {
          if (!acceptable(uy, piece)) continue;
          std::vector<Arc> cs;
          std::vector<Arc> ys;
          for (int k = 0; k <= n3; ++k) {
            cs.push_back(side == 0 ? at(d, i + 1 + k) : at(d, i - k));
          }
          for (int k = 1; k <= 2 * n1 - 2; ++k) {
            ys.push_back(side == 0 ? at(y, i - k) : at(y, i + k));
          }
          for (int swap_at = 0; swap_at < 2; ++swap_at) {
            for (const Arc& inner : *r.x) {
              if (!arc_subset(f.m, inner, cs[swap_at])) continue;
              std::vector<Arc> family = cs;
              family[swap_at] = inner;
              family.insert(family.end(), ys.begin(), ys.end());
              family.push_back(piece);
              if (Result res = try_family(f, family, name)) return res;
            }
          }
        }
      }
    }
  }
  for (int a : anchors_in_contained(f, *r.x)) {
    AnchoredSplit xa = anchor_split(f.m, *r.x, a);
    AnchoredSplit ca = anchor_split(f.m, f.c, a);
    std::vector<char> jc = jump_table(ca, xa);
    for (int j = 0; j < 2; ++j) {
      if (n3 + j > n || !jump(jc, n3 + j)) continue;
      Result res = try_useful(
          f, xa, ca,
          {{Source::kY, 1, n3 + j}, {Source::kX, n3 + j + 1, n}}, name);
      if (res) return res;
    }
  }
  return std::nullopt;
}

Result lemma_equal(const Frame& f, bool swap, bool allow_mirror) {
  Roles r = roles(f, swap);
  bool case1 = false;
  bool case2 = false;
  for (int a : anchors_in_contained(f, *r.x)) {
    AnchoredSplit xa = anchor_split(f.m, *r.x, a);
    AnchoredSplit ya = anchor_split(f.m, *r.y, a);
    AnchoredSplit ca = anchor_split(f.m, f.c, a);
    if (!inside(f.m, ya.at(0), {xa.at(-1), xa.at(0)})) continue;
    std::vector<char> ja = jump_table(xa, ca);
    std::vector<char> jc = jump_table(ca, xa);
    for (int i = 1; i <= f.n; ++i) {
      case1 = case1 || (jump(ja, i) && jump(ja, i + 1));
      case2 = case2 || (jump(jc, i) && jump(jc, i + 1));
    }
  }
  if (case1) {
    if (Result res = equal_case1(f, swap, "three-types-34/equal-1")) return res;
  } else if (case2 && allow_mirror) {
    if (Result res = equal_case1(mirror(f), swap, "three-types-34/equal-2")) {
      return res;
    }
  } else if (Result res = equal_case3(f, swap, "three-types-34/equal-3")) {
    return res;
  }
  // Constructions of the other branches, in case the branch taken failed at
  // every anchor.
  if (Result res = equal_case1(f, swap, "three-types-34/equal-1")) return res;
  if (allow_mirror) {
    if (Result res = equal_case1(mirror(f), swap, "three-types-34/equal-2")) {
      return res;
    }
  }
  return equal_case3(f, swap, "three-types-34/equal-3");
}

// ---- main cases ---------------------------------------------------------

Result case2(const Frame& f) {
  int n = f.n;
  int n3 = f.n3;
  for (int a : anchors_in_contained(f, f.a)) {
    AnchoredSplit xa = anchor_split(f.m, f.a, a);
    AnchoredSplit ca = anchor_split(f.m, f.c, a);
    std::vector<char> jc = jump_table(ca, xa);
    Result res;
    if (jump(jc, n3)) {
      res = try_useful(f, xa, ca,
                       {{Source::kY, 1, n3}, {Source::kX, n3 + 1, n}},
                       "three-types-34/case-2");
    } else {
      int k = last_jump(jc, 1, n3);
      int l = first_jump_or(jc, n3, n);
      if (k >= 1) {
        res = try_useful(f, xa, ca,
                         {{Source::kY, 1, k},
                          {Source::kX, k + 1, l - (n3 - k)},
                          {Source::kY, l - (n3 - k) + 1, l},
                          {Source::kX, l + 1, n}},
                         "three-types-34/case-2");
      }
    }
    if (res) return res;
  }
  return std::nullopt;
}

Result case7(const Frame& f) {
  int n = f.n;
  int t = 2 * f.n3;
  for (int a : anchors_in_contained(f, f.b)) {
    AnchoredSplit xb = anchor_split(f.m, f.b, a);
    AnchoredSplit ca = anchor_split(f.m, f.c, a);
    std::vector<char> jc = jump_table(ca, xb);
    std::vector<Range> z;
    if (jump(jc, t)) {
      z = {{Source::kY, 1, t}, {Source::kX, t + 1, n}};
    } else if (jump(jc, t - 1)) {
      z = {{Source::kY, 1, t - 1}, {Source::kX, t, n}};
    } else {
      int k = last_jump(jc, 1, t - 1);
      int l = first_jump_or(jc, t, n);
      if (k < 1) continue;
      if (k % 2 == 0) {
        z = {{Source::kY, 1, k},
             {Source::kX, k + 1, l - (t - k)},
             {Source::kY, l - (t - k) + 1, l},
             {Source::kX, l + 1, n}};
      } else {
        z = {{Source::kY, 1, k},
             {Source::kX, k + 1, l - (t - k) + 1},
             {Source::kY, l - (t - k) + 2, l},
             {Source::kX, l + 1, n}};
      }
    }
    if (Result res = try_useful(f, xb, ca, z, "three-types-34/case-7")) {
      return res;
    }
  }
  return std::nullopt;
}

// x aligned with C as x_r in D_r u D_{r+1}; for each acceptable piece of
// x_r n D_r, family = piece, `c_count` D-sets after D_r, then x-sets from
// x_{r + 1 + c_count} up to x_{r + n - 1}.
Result aligned_case(const Frame& f, const std::vector<Arc>& x, int piece_type,
                    int c_count, const std::string& name) {
  if (!proper_relative(f.m, x, f.c)) return std::nullopt;
  std::vector<Arc> d = align_after(f.m, x, f.c);
  const Utility& u = f.type(piece_type);
  for (int r = 0; r < f.n; ++r) {
    for (const Arc& piece : arc_intersection(f.m, at(x, r), at(d, r))) {
      if (!acceptable(u, piece)) continue;
      std::vector<Arc> family{piece};
      append_run(family, d, r + 1, c_count);
      append_run(family, x, r + 1 + c_count, f.n - 1 - c_count);
      if (Result res = try_family(f, family, name)) return res;
    }
  }
  return std::nullopt;
}

Allocation dispatch(const Frame& f, bool allow_mirror) {
  int m = f.m;
  int n = f.n;
  for (const Arc& x : f.a) {
    for (const Arc& y : f.b) {
      for (const Arc& q : arc_intersection(m, x, y)) {
        for (const Utility& u : f.inst.agents) {
          if (acceptable(u, q)) {
            return in_original(f, lemma_intersection(f.inst, q, kThreeQuarters),
                               "three-types-34/case-1");
          }
        }
      }
    }
  }
  if (some_contained(m, f.c, f.a)) {
    Result res = f.n1 == f.n2 ? lemma_equal(f, false, allow_mirror) : case2(f);
    ensure(res.has_value(), "case 2 found no allocation");
    return *res;
  }
  ensure(!some_contained(m, f.a, f.c), "an A-set lies inside a C-set");

  auto with_mirror = [&](Result res, const char* what) {
    if (res) return *res;
    ensure(allow_mirror, what);
    return dispatch(mirror(f), false);
  };
  if (piece_acceptable(m, f.a, f.c, f.type(2))) {
    return with_mirror(
        aligned_case(f, f.a, 2, f.n3 - 1, "three-types-34/case-4"),
        "case 4 found no allocation");
  }
  if (f.n1 >= n / 2) {
    Result res = try_family(f, f.a, "three-types-34/case-5");
    ensure(res.has_value(), "case 5 found no allocation");
    return *res;
  }
  if (f.n1 > f.n2 && piece_acceptable(m, f.a, f.c, f.type(0))) {
    return with_mirror(aligned_case(f, f.a, 0, f.n3, "three-types-34/case-6"),
                       "case 6 found no allocation");
  }
  if (some_contained(m, f.c, f.b)) {
    Result res = f.n1 == f.n2 ? lemma_equal(f, true, allow_mirror) : case7(f);
    ensure(res.has_value(), "case 7 found no allocation");
    return *res;
  }
  ensure(!some_contained(m, f.b, f.c), "a B-set lies inside a C-set");
  if (piece_acceptable(m, f.b, f.c, f.type(2))) {
    int c_count = f.n1 > f.n2 ? 2 * f.n3 - 2 : f.n3 - 1;
    return with_mirror(
        aligned_case(f, f.b, 2, c_count, "three-types-34/case-8"),
        "case 8 found no allocation");
  }
  Result res = try_family(f, f.a, "three-types-34/case-9");
  ensure(res.has_value(), "case 9 found no allocation");
  return *res;
}

}  // namespace

namespace detail {

Allocation three_types_regular(const Instance& regular) {
  std::vector<std::vector<int>> groups = sorted_groups(regular);
  require(groups.size() <= 3, "three-types-34 needs at most three types");
  if (groups.size() <= 2) {
    Allocation alloc = two_types_regular(regular);
    alloc.provenance = "three-types-34/two-types";
    return alloc;
  }
  return dispatch(make_frame(regular), true);
}

}  // namespace detail

Allocation three_quarters_three_types(const Instance& inst) {
  detail::require_cycle(inst, "three-types-34");
  require(distinct_types(inst) <= 3, "three-types-34 needs at most three types");
  Regularized reg = regularize(inst);
  if (reg.certificate.trivial) {
    return detail::everything_to_first(inst, "three-types-34");
  }
  Allocation alloc = detail::three_types_regular(reg.regular);
  return detail::finish(reg, alloc, Rational(3, 4), alloc.provenance);
}

}  // namespace mmsc
