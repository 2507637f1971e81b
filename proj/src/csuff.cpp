#include "mmsc/csuff.hpp"

#include <algorithm>
#include <numeric>

#include "csuff_detail.hpp"
#include "mmsc/anchored.hpp"
#include "mmsc/error.hpp"
#include "mmsc/exact.hpp"
#include "mmsc/matching.hpp"
#include "mmsc/mms.hpp"
#include "mmsc/regularize.hpp"

namespace mmsc {
namespace detail {

void require_cycle(const Instance& inst, const char* method) {
  if (inst.graph.shape() != Shape::kCycle) {
    fail(ErrorCode::kUnsupportedShape, std::string(method) + " needs a cycle");
  }
  validate_instance(inst);
}

std::vector<Arc> regular_split_arcs(const Utility& u, int n) {
  int m = static_cast<int>(u.size());
  std::vector<Arc> arcs;
  for (const Bundle& b : mms_cycle(u, n).split) {
    std::optional<Arc> a = bundle_as_arc(m, b);
    ensure(a && !a->empty(), "regular mms split has an empty bundle");
    arcs.push_back(*a);
  }
  return clockwise(std::move(arcs));
}

std::optional<Allocation> singleton_escape(const Instance& regular,
                                           const Rational& c) {
  int n = regular.n();
  require(n >= 2, "singleton escape needs two agents");
  std::vector<Rational> ones(n, Rational(1));
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < regular.m(); ++x) {
      if (regular.agents[i][x] >= c) {
        Allocation alloc = singleton_then_path(regular, i, x, ones);
        alloc.provenance = "singleton";
        return alloc;
      }
    }
  }
  return std::nullopt;
}

std::optional<Allocation> assemble_family(const Instance& regular,
                                          const std::vector<Arc>& family,
                                          const Rational& c) {
  int n = regular.n();
  int m = regular.m();
  if (static_cast<int>(family.size()) != n) return std::nullopt;
  std::vector<int> hits(m, 0);
  for (const Arc& a : family) {
    if (a.empty()) return std::nullopt;
    for (int k = 0; k < a.length; ++k) {
      if (hits[(a.start + k) % m]++) return std::nullopt;
    }
  }
  std::vector<std::vector<char>> allowed(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int b = 0; b < n; ++b) {
      allowed[i][b] = arc_value(regular.agents[i], family[b]) >= c;
    }
  }
  std::optional<std::vector<int>> match = perfect_matching(allowed);
  if (!match) return std::nullopt;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return family[x].start < family[y].start;
  });
  std::vector<Arc> grown(n);
  for (int t = 0; t < n; ++t) {
    const Arc& cur = family[order[t]];
    const Arc& next = family[order[(t + 1) % n]];
    int len = n == 1 ? m : (next.start - cur.start + m) % m;
    grown[order[t]] = make_arc(m, cur.start, len);
  }
  Allocation alloc;
  for (int i = 0; i < n; ++i) {
    alloc.bundles.push_back(arc_goods(m, grown[(*match)[i]]));
  }
  return alloc;
}

std::vector<std::vector<int>> sorted_groups(const Instance& inst) {
  std::vector<std::vector<int>> groups = identical_utility_groups(inst);
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& x, const auto& y) {
                     return x.size() > y.size();
                   });
  return groups;
}

Allocation finish(const Regularized& reg, Allocation alloc, const Rational& c,
                  const std::string& provenance) {
  const Instance& r = reg.regular;
  ensure(static_cast<int>(alloc.bundles.size()) == r.n(),
         "constructed allocation has the wrong size");
  ensure(validate_split(r.graph, alloc.bundles),
         "constructed bundles are not a split");
  if (!reg.certificate.trivial) {
    for (int i = 0; i < r.n(); ++i) {
      ensure(bundle_value(r.agents[i], alloc.bundles[i]) >= c,
             "constructed bundle below the guarantee");
    }
  }
  alloc.provenance = provenance;
  pull_back(alloc, reg, c);
  return alloc;
}

Allocation everything_to_first(const Instance& inst,
                               const std::string& provenance) {
  Allocation alloc;
  alloc.bundles.assign(inst.n(), Bundle{});
  for (int g = 0; g < inst.m(); ++g) alloc.bundles[0].push_back(g);
  alloc.provenance = provenance;
  return alloc;
}

namespace {

// Protocol from q on the path that starts with q and runs clockwise round
// the cycle; every agent must end up with a bundle.
Allocation protocol_from(const Instance& regular, const Arc& q,
                         const Rational& c) {
  int m = regular.m();
  std::vector<int> path;
  for (int k = 0; k < m; ++k) path.push_back((q.start + k) % m);
  std::vector<const Utility*> agents;
  for (const Utility& u : regular.agents) agents.push_back(&u);
  ProtocolResult res = allocate_protocol(agents, path, q.length, c);
  ensure(res.complete(), "protocol left an agent without a bundle");
  Allocation alloc;
  alloc.bundles = std::move(res.bundles);
  Bundle& tail = alloc.bundles[res.last];
  tail.insert(tail.end(), res.leftover.begin(), res.leftover.end());
  std::sort(tail.begin(), tail.end());
  alloc.provenance = "protocol";
  return alloc;
}

}  // namespace

Allocation two_types_regular(const Instance& regular) {
  std::vector<std::vector<int>> groups = sorted_groups(regular);
  require(groups.size() <= 2, "two-types-34 needs at most two types");
  if (groups.size() == 1) return allocate_one_deviant(regular);
  int n = regular.n();
  int m = regular.m();
  const Rational c(3, 4);
  std::vector<Arc> a = regular_split_arcs(regular.agents[groups[0][0]], n);
  std::vector<Arc> b = regular_split_arcs(regular.agents[groups[1][0]], n);
  for (const Arc& x : a) {
    for (const Arc& y : b) {
      for (const Arc& q : arc_intersection(m, x, y)) {
        for (int k = 0; k < n; ++k) {
          if (arc_value(regular.agents[k], q) < c) continue;
          std::vector<int> order;
          for (int s = q.length; s < m; ++s) order.push_back((q.start + s) % m);
          std::vector<const Utility*> others;
          std::vector<int> who;
          for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            others.push_back(&regular.agents[i]);
            who.push_back(i);
          }
          std::vector<Bundle> rest = allocate_subtree(
              path_subtree(order), others,
              std::vector<Rational>(others.size(), Rational(1)));
          Allocation alloc;
          alloc.bundles.assign(n, Bundle{});
          alloc.bundles[k] = arc_goods(m, q);
          for (std::size_t j = 0; j < who.size(); ++j) {
            alloc.bundles[who[j]] = std::move(rest[j]);
          }
          return alloc;
        }
      }
    }
  }
  std::optional<Allocation> alloc = assemble_family(regular, a, c);
  ensure(alloc.has_value(), "A-sets cannot be matched at 3/4");
  return *alloc;
}

}  // namespace detail

using detail::finish;

bool ProtocolResult::complete() const {
  return std::all_of(assigned.begin(), assigned.end(),
                     [](char a) { return a != 0; });
}

int strong_piece_count(const Utility& u, const std::vector<int>& order,
                       const Rational& c) {
  require(sgn(c) > 0, "piece threshold must be positive");
  int count = 0;
  Rational sum = 0;
  for (int g : order) {
    sum += u[g];
    if (sum >= c) {
      ++count;
      sum = 0;
    }
  }
  return count;
}

ProtocolResult allocate_protocol(const std::vector<const Utility*>& agents,
                                 const std::vector<int>& path, int q_length,
                                 const Rational& c) {
  int n = static_cast<int>(agents.size());
  int len = static_cast<int>(path.size());
  require(n >= 2, "protocol needs at least two agents");
  require(sgn(c) > 0, "protocol threshold must be positive");
  require(q_length >= 1 && q_length <= len, "q is not a prefix of the path");
  std::vector<int> q(path.begin(), path.begin() + q_length);
  require(std::any_of(agents.begin(), agents.end(),
                      [&](const Utility* u) {
                        return bundle_value(*u, q) >= c;
                      }),
          "q is worth less than c to every agent");

  ProtocolResult res;
  res.bundles.assign(n, Bundle{});
  res.assigned.assign(n, 0);
  res.in_s.assign(n, 0);
  std::vector<int> rest(path.begin() + q_length, path.end());
  for (int i = 0; i < n; ++i) {
    res.in_s[i] = strong_piece_count(*agents[i], rest, c) >= n - 1;
  }

  int pos = 0;
  for (int j = 1; j <= n; ++j) {
    std::vector<Rational> sums(n, Rational(0));
    int end = -1;
    for (int e = pos; e < len && end < 0; ++e) {
      for (int i = 0; i < n; ++i) {
        if (res.assigned[i]) continue;
        sums[i] += (*agents[i])[path[e]];
        if (sums[i] >= c) end = e;
      }
    }
    if (end < 0) break;
    int pick = -1;
    for (int pass = 0; pass < 2 && pick < 0; ++pass) {
      for (int i = 0; i < n; ++i) {
        bool want_s = pass == 1;
        if (res.assigned[i] || (res.in_s[i] != 0) != want_s) continue;
        if (sums[i] >= c) {
          pick = i;
          break;
        }
      }
    }
    ensure(pick >= 0, "shortest prefix has no taker");
    res.bundles[pick].assign(path.begin() + pos, path.begin() + end + 1);
    std::sort(res.bundles[pick].begin(), res.bundles[pick].end());
    res.assigned[pick] = 1;
    res.last = pick;
    pos = end + 1;
  }
  res.leftover.assign(path.begin() + pos, path.end());
  for (int i = 0; i < n; ++i) {
    ensure(!res.in_s[i] || res.assigned[i], "an agent of S was not served");
  }
  return res;
}

Allocation lemma_intersection(const Instance& regular, const Arc& q,
                              const Rational& c) {
  if (auto alloc = detail::singleton_escape(regular, c)) return *alloc;
  return detail::protocol_from(regular, q, c);
}

Allocation half_sufficient(const Instance& inst) {
  detail::require_cycle(inst, "half");
  int n = inst.n();
  int m = inst.m();
  if (n == 1) return detail::everything_to_first(inst, "half");
  std::vector<int> order = cycle_path_order(m, m - 1);
  std::vector<const Utility*> agents;
  std::vector<Rational> thresholds;
  for (const Utility& u : inst.agents) {
    agents.push_back(&u);
    thresholds.push_back(mms_path_order(u, order, n).value);
  }
  Allocation alloc{allocate_subtree(path_subtree(order), agents, thresholds),
                   "half"};
  build_report(inst, alloc, mms_values(inst), Rational(1, 2));
  return alloc;
}

PsiChoice psi_choice(int n) {
  require(n >= 1, "psi needs at least one agent");
  if (n == 1) return {1, Rational(1)};
  PsiChoice best{0, Rational(-1)};
  for (int d = n; d < n * n; ++d) {
    Rational first = make_rational(n, d);
    Rational second = make_rational(n, (n * n + d - 1) / d + n - 2);
    Rational f = first < second ? first : second;
    if (f > best.c) best = {d, f};
  }
  return best;
}

bool at_least_psi(const Rational& c) {
  Rational s = 2 * c + 1;
  return sgn(c) >= 0 && s * s >= 5;
}

PsiPlan psi_plan(const Instance& regular) {
  int n = regular.n();
  int m = regular.m();
  require(n >= 2, "psi plan needs two agents");
  std::vector<std::vector<char>> cut(n, std::vector<char>(m, 0));
  for (int i = 0; i < n; ++i) {
    require(total_value(regular.agents[i]) == n, "psi plan needs regular agents");
    for (const Arc& a : detail::regular_split_arcs(regular.agents[i], n)) {
      cut[i][arc_last(m, a)] = 1;
    }
  }
  PsiPlan plan;
  for (int k = 0; k < m; ++k) {
    int e = (m - 1 + k) % m;
    for (int i = 0; i < n; ++i) {
      if (cut[i][e]) plan.edges.push_back(e);
    }
  }
  ensure(static_cast<int>(plan.edges.size()) == n * n, "edge sequence size");

  PsiChoice choice = psi_choice(n);
  plan.p = choice.p;
  plan.c = choice.c;
  plan.h_hi = (n * n + plan.p - 1) / plan.p;
  plan.h_lo = n * n / plan.p;
  plan.r = n * n - plan.p * plan.h_lo;
  ensure(plan.p >= n && plan.p < n * n, "p outside [n, n^2)");
  for (int k = 0; k <= plan.r; ++k) plan.removed.push_back(k * plan.h_hi);
  for (int k = 1; k < plan.p - plan.r; ++k) {
    plan.removed.push_back(plan.r * plan.h_hi + k * plan.h_lo);
  }
  ensure(static_cast<int>(plan.removed.size()) == plan.p &&
             plan.removed.back() < n * n,
         "removed positions");

  std::vector<int> cuts;
  for (int pos : plan.removed) cuts.push_back(plan.edges[pos]);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  ensure(cuts.size() >= 2, "psi split has a single cut");
  int k = static_cast<int>(cuts.size());
  for (int t = 0; t < k; ++t) {
    int from = cuts[t];
    int to = cuts[(t + 1) % k];
    plan.parts.push_back(make_arc(m, from + 1, (to - from + m) % m));
  }
  std::sort(plan.parts.begin(), plan.parts.end(),
            [](const Arc& x, const Arc& y) { return x.start < y.start; });
  const Utility& last = regular.agents[n - 1];
  plan.q = plan.parts[0];
  for (const Arc& part : plan.parts) {
    if (arc_value(last, part) > arc_value(last, plan.q)) plan.q = part;
  }
  ensure(arc_value(last, plan.q) >= plan.c, "largest part below c");
  return plan;
}

Allocation psi_sufficient(const Instance& inst) {
  detail::require_cycle(inst, "psi");
  int n = inst.n();
  if (n == 1) return detail::everything_to_first(inst, "psi");
  Regularized reg = regularize(inst);
  if (reg.certificate.trivial) return detail::everything_to_first(inst, "psi");
  PsiChoice choice = psi_choice(n);
  ensure(at_least_psi(choice.c), "psi coefficient below (sqrt 5 - 1)/2");
  if (auto alloc = detail::singleton_escape(reg.regular, choice.c)) {
    return finish(reg, *alloc, choice.c, "psi");
  }
  PsiPlan plan = psi_plan(reg.regular);
  return finish(reg, detail::protocol_from(reg.regular, plan.q, plan.c),
                choice.c, "psi");
}

Rational t_types_coefficient(int t) {
  require(t >= 2, "t/(2t-2) needs t >= 2");
  return make_rational(t, 2 * t - 2);
}

int distinct_types(const Instance& inst) {
  return static_cast<int>(identical_utility_groups(inst).size());
}

Allocation t_over_2t2_sufficient(const Instance& inst) {
  detail::require_cycle(inst, "t-types");
  int t = distinct_types(inst);
  require(t >= 4, "t-types needs at least four types");
  Rational c = t_types_coefficient(t);
  Regularized reg = regularize(inst);
  if (reg.certificate.trivial) {
    return detail::everything_to_first(inst, "t-types");
  }
  const Instance& r = reg.regular;
  std::vector<std::vector<int>> groups = detail::sorted_groups(r);
  if (groups.size() == 1) return finish(reg, allocate_one_deviant(r), c, "t-types");
  int n = r.n();
  int m = r.m();
  std::vector<Arc> a = detail::regular_split_arcs(r.agents[groups[0][0]], n);
  std::vector<Arc> b = detail::regular_split_arcs(r.agents[groups[1][0]], n);
  for (const Arc& x : a) {
    for (const Arc& y : b) {
      for (const Arc& q : arc_intersection(m, x, y)) {
        for (const Utility& u : r.agents) {
          if (arc_value(u, q) >= c) {
            return finish(reg, lemma_intersection(r, q, c), c, "t-types");
          }
        }
      }
    }
  }
  // The A-split is then c-strong for the second type as well.
  for (const Arc& x : a) {
    ensure(arc_value(r.agents[groups[1][0]], x) >= c,
           "A-set below c for the second type");
  }
  return finish(reg, lemma_intersection(r, a[0], c), c, "t-types");
}

Allocation three_quarters_two_types(const Instance& inst) {
  detail::require_cycle(inst, "two-types-34");
  require(distinct_types(inst) <= 2, "two-types-34 needs at most two types");
  Regularized reg = regularize(inst);
  if (reg.certificate.trivial) {
    return detail::everything_to_first(inst, "two-types-34");
  }
  return finish(reg, detail::two_types_regular(reg.regular), Rational(3, 4),
                "two-types-34");
}

}  // namespace mmsc
