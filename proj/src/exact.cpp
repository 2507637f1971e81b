#include "mmsc/exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mmsc/error.hpp"
#include "mmsc/matching.hpp"
#include "mmsc/oracle.hpp"
#include "mmsc/regularize.hpp"

namespace mmsc {
namespace {

std::vector<int> all_goods(int m) {
  std::vector<int> goods(m);
  std::iota(goods.begin(), goods.end(), 0);
  return goods;
}

Allocation everything_to(const Instance& inst, int agent,
                         const std::string& provenance) {
  Allocation alloc;
  alloc.bundles.assign(inst.n(), Bundle{});
  alloc.bundles[agent] = all_goods(inst.m());
  alloc.provenance = provenance;
  return alloc;
}

void require_cycle(const Instance& inst) {
  if (inst.graph.shape() != Shape::kCycle) {
    fail(ErrorCode::kUnsupportedShape, "method needs a cycle");
  }
}

std::vector<Rational> cycle_mms_values(const Instance& inst) {
  std::vector<Rational> out;
  for (const Utility& u : inst.agents) {
    out.push_back(mms_cycle(u, inst.n()).value);
  }
  return out;
}

struct Rooting {
  std::vector<int> order;
  std::vector<int> parent;
  std::vector<int> depth;
};

Rooting root_remaining(const SubTree& tree, const std::vector<char>& removed) {
  int s = tree.size();
  Rooting r;
  r.parent.assign(s, -1);
  r.depth.assign(s, -1);
  r.order.push_back(0);
  r.depth[0] = 0;
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    int v = r.order[head];
    for (int w : tree.adj[v]) {
      if (removed[w] || r.depth[w] >= 0) continue;
      r.depth[w] = r.depth[v] + 1;
      r.parent[w] = v;
      r.order.push_back(w);
    }
  }
  return r;
}

}  // namespace

std::vector<std::vector<int>> type_groups(const Instance& inst) {
  require(inst.types.has_value(), "method needs an explicit types line");
  std::vector<std::vector<int>> groups;
  std::map<int, std::size_t> slot;
  for (int i = 0; i < inst.n(); ++i) {
    int t = (*inst.types)[i];
    auto [it, fresh] = slot.emplace(t, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return groups;
}

std::vector<Bundle> allocate_subtree(const SubTree& tree,
                                     const std::vector<const Utility*>& agents,
                                     const std::vector<Rational>& thresholds) {
  int k = static_cast<int>(agents.size());
  ensure(static_cast<int>(thresholds.size()) == k, "threshold count");
  std::vector<Bundle> out(k);
  int s = tree.size();
  if (k == 0) {
    ensure(s == 0, "goods left without agents");
    return out;
  }
  std::vector<char> removed(s, 0);
  std::vector<int> pending;
  for (int i = 0; i < k; ++i) {
    if (sgn(thresholds[i]) > 0) pending.push_back(i);
  }

  while (pending.size() > 1) {
    ensure(s > 0 && !removed[0], "tree exhausted before agents");
    Rooting r = root_remaining(tree, removed);
    std::size_t p = pending.size();
    std::vector<std::vector<Rational>> below(p, std::vector<Rational>(s));
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
      int v = *it;
      for (std::size_t a = 0; a < p; ++a) {
        below[a][v] += (*agents[pending[a]])[tree.goods[v]];
        if (r.parent[v] >= 0) below[a][r.parent[v]] += below[a][v];
      }
    }
    int best = -1;
    std::size_t taker = 0;
    for (int v : r.order) {
      for (std::size_t a = 0; a < p; ++a) {
        if (below[a][v] < thresholds[pending[a]]) continue;
        bool better = best < 0 || r.depth[v] > r.depth[best] ||
                      (r.depth[v] == r.depth[best] &&
                       tree.goods[v] < tree.goods[best]);
        if (better) {
          best = v;
          taker = a;
        }
        break;
      }
    }
    ensure(best > 0, "no proper subtree satisfies a remaining agent");
    Bundle bundle;
    std::vector<int> stack{best};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      removed[v] = 1;
      bundle.push_back(tree.goods[v]);
      for (int w : tree.adj[v]) {
        if (!removed[w] && r.parent[w] == v) stack.push_back(w);
      }
    }
    std::sort(bundle.begin(), bundle.end());
    out[pending[taker]] = std::move(bundle);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(taker));
  }

  int last = pending.empty() ? k - 1 : pending.front();
  Bundle rest;
  for (int v = 0; v < s; ++v) {
    if (!removed[v]) rest.push_back(tree.goods[v]);
  }
  std::sort(rest.begin(), rest.end());
  ensure(bundle_value(*agents[last], rest) >= thresholds[last],
         "remainder below the last agent's threshold");
  out[last] = std::move(rest);
  return out;
}

Allocation allocate_tree(const Instance& inst) {
  Shape shape = inst.graph.shape();
  if (shape != Shape::kTree && shape != Shape::kPath) {
    fail(ErrorCode::kUnsupportedShape, "tree method needs a tree or path");
  }
  validate_instance(inst);
  std::vector<const Utility*> agents;
  std::vector<Rational> thresholds;
  for (const Utility& u : inst.agents) {
    agents.push_back(&u);
    thresholds.push_back(mms(inst.graph, u, inst.n()).value);
  }
  SubTree tree = induced_subtree(inst.graph, all_goods(inst.m()));
  return {allocate_subtree(tree, agents, thresholds), "tree"};
}

Allocation allocate_one_deviant(const Instance& inst) {
  validate_instance(inst);
  int n = inst.n();
  if (n == 1) return everything_to(inst, 0, "one-deviant");
  std::vector<std::vector<int>> groups = identical_utility_groups(inst);
  auto common = std::find_if(groups.begin(), groups.end(), [&](const auto& g) {
    return static_cast<int>(g.size()) >= n - 1;
  });
  require(common != groups.end(),
          "more than one agent differs from the common type");
  const Utility& u = inst.agents[common->front()];
  Split split = inst.graph.shape() == Shape::kGeneral
                    ? oracle_mms(inst.graph, u, n).split
                    : mms(inst.graph, u, n).split;
  ensure(static_cast<int>(split.size()) == n, "mms split size");

  std::vector<char> taken(n, 0);
  Allocation alloc;
  alloc.bundles.assign(n, Bundle{});
  alloc.provenance = "one-deviant";
  std::vector<char> in_common(n, 0);
  for (int i : *common) in_common[i] = 1;
  for (int i = 0; i < n; ++i) {
    if (in_common[i]) continue;
    int pick = 0;
    for (int b = 1; b < n; ++b) {
      if (bundle_value(inst.agents[i], split[b]) >
          bundle_value(inst.agents[i], split[pick])) {
        pick = b;
      }
    }
    taken[pick] = 1;
    alloc.bundles[i] = split[pick];
  }
  int b = 0;
  for (int i : *common) {
    while (taken[b]) ++b;
    taken[b] = 1;
    alloc.bundles[i] = split[b];
  }
  return alloc;
}

Allocation singleton_then_path(const Instance& inst, int owner, int x,
                               const std::vector<Rational>& thresholds) {
  int m = inst.m();
  std::vector<int> order = cycle_path_order(m, x);
  order.pop_back();
  SubTree path = path_subtree(order);
  std::vector<const Utility*> agents;
  std::vector<Rational> rest;
  std::vector<int> who;
  for (int i = 0; i < inst.n(); ++i) {
    if (i == owner) continue;
    agents.push_back(&inst.agents[i]);
    rest.push_back(thresholds[i]);
    who.push_back(i);
  }
  std::vector<Bundle> bundles = allocate_subtree(path, agents, rest);
  Allocation alloc;
  alloc.bundles.assign(inst.n(), Bundle{});
  alloc.bundles[owner] = {x};
  for (std::size_t j = 0; j < who.size(); ++j) {
    alloc.bundles[who[j]] = std::move(bundles[j]);
  }
  return alloc;
}

Allocation allocate_cycle_m_lt_2n(const Instance& inst) {
  require_cycle(inst);
  validate_instance(inst);
  int n = inst.n();
  int m = inst.m();
  require(m < 2 * n, "m-lt-2n needs fewer than 2n goods");
  if (n == 1) return everything_to(inst, 0, "m-lt-2n");
  std::vector<Rational> q = cycle_mms_values(inst);
  const Utility& last = inst.agents[n - 1];
  Split split = mms_cycle(last, n).split;
  int x = -1;
  for (const Bundle& b : split) {
    if (b.size() == 1 && last[b[0]] >= q[n - 1]) {
      x = b[0];
      break;
    }
  }
  if (x < 0) {
    ensure(sgn(q[n - 1]) == 0, "mms split without a singleton");
    x = 0;
  }
  Allocation alloc = singleton_then_path(inst, n - 1, x, q);
  alloc.provenance = "m-lt-2n";
  return alloc;
}

std::optional<Allocation> decide_cycle_m_eq_2n(const Instance& inst) {
  require_cycle(inst);
  validate_instance(inst);
  int n = inst.n();
  int m = inst.m();
  require(m == 2 * n, "m-eq-2n needs exactly 2n goods");
  if (n == 1) return everything_to(inst, 0, "m-eq-2n");
  std::vector<Rational> q = cycle_mms_values(inst);
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < m; ++x) {
      if (inst.agents[i][x] >= q[i]) {
        Allocation alloc = singleton_then_path(inst, i, x, q);
        alloc.provenance = "m-eq-2n";
        return alloc;
      }
    }
  }
  for (int offset = 0; offset < 2; ++offset) {
    Split pairs;
    for (int b = 0; b < n; ++b) {
      Bundle pair{(offset + 2 * b) % m, (offset + 2 * b + 1) % m};
      std::sort(pair.begin(), pair.end());
      pairs.push_back(pair);
    }
    std::vector<std::vector<char>> allowed(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int b = 0; b < n; ++b) {
        allowed[i][b] = bundle_value(inst.agents[i], pairs[b]) >= q[i];
      }
    }
    if (auto match = perfect_matching(allowed)) {
      Allocation alloc;
      alloc.provenance = "m-eq-2n";
      for (int i = 0; i < n; ++i) alloc.bundles.push_back(pairs[(*match)[i]]);
      return alloc;
    }
  }
  return std::nullopt;
}

Allocation allocate_three_agents_small(const Instance& inst) {
  require_cycle(inst);
  validate_instance(inst);
  require(inst.n() == 3, "three-small needs exactly three agents");
  int m = inst.m();
  require(m <= 8, "three-small needs at most 8 goods");
  Regularized reg = regularize(inst);
  if (reg.certificate.trivial) return everything_to(inst, 0, "three-small");
  const std::vector<Utility>& u = reg.regular.agents;

  std::vector<std::vector<Arc>> arcs(3);
  std::vector<std::vector<char>> cut(3, std::vector<char>(m, 0));
  for (int i = 0; i < 3; ++i) {
    for (const Bundle& b : mms_cycle(u[i], 3).split) {
      std::optional<Arc> a = bundle_as_arc(m, b);
      ensure(a && !a->empty(), "regular mms split has an empty bundle");
      arcs[i].push_back(*a);
      cut[i][arc_last(m, *a)] = 1;
    }
  }
  // Edge e joins goods e and e+1.
  int e = -1, p = -1, q = -1;
  for (int g = 0; g < m && e < 0; ++g) {
    for (int a = 0; a < 3 && e < 0; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (cut[a][g] && cut[b][g]) {
          e = g;
          p = a;
          q = b;
          break;
        }
      }
    }
  }
  ensure(e >= 0, "no boundary edge shared by two splits");
  auto starting_at = [&](int agent, int good) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (arcs[agent][j].start == good) return j;
    }
    ensure(false, "split has no bundle at a shared boundary");
    return std::size_t{0};
  };
  int start = (e + 1) % m;
  std::size_t jp = starting_at(p, start);
  std::size_t jq = starting_at(q, start);
  // Owner of the inner bundle A and of the enclosing bundle B.
  int inner = p, outer = q;
  std::size_t jb = jq;
  if (arcs[p][jp].length > arcs[q][jq].length) {
    std::swap(inner, outer);
    jb = jp;
  }
  int third = 3 - inner - outer;
  Arc a = arcs[inner][inner == p ? jp : jq];
  Arc b = arcs[outer][jb];
  Arc next = arcs[outer][(jb + 1) % 3];
  Arc prev = arcs[outer][(jb + 2) % 3];
  ensure(arc_subset(m, a, b), "shared boundary without containment");
  Arc grown = make_arc(m, a.start + a.length,
                       b.length - a.length + next.length);
  std::vector<Arc> parts{prev, grown};
  for (const Arc& part : parts) {
    ensure(arc_value(u[outer], part) >= 1, "outer part below one");
  }

  std::vector<Arc> given(3);
  int chooser = inner;
  if (arc_value(u[third], a) >= 1) {
    given[third] = a;
  } else {
    given[inner] = a;
    chooser = third;
  }
  std::size_t pick = arc_value(u[chooser], parts[0]) >= 1 ? 0 : 1;
  ensure(arc_value(u[chooser], parts[pick]) >= 1, "chooser finds no part");
  given[chooser] = parts[pick];
  given[outer] = parts[1 - pick];

  Allocation alloc;
  alloc.provenance = "three-small";
  for (const Arc& arc : given) alloc.bundles.push_back(arc_goods(m, arc));
  pull_back(alloc, reg, 1);
  return alloc;
}

int DpTables::index(const std::vector<int>& h) const {
  int idx = 0;
  for (std::size_t r = h.size(); r-- > 0;) idx = idx * radix[r] + h[r];
  return idx;
}

int DpTables::full_index() const {
  std::vector<int> h;
  for (int r : radix) h.push_back(r - 1);
  return index(h);
}

DpTables build_dp_tables(const TypeProfile& profile) {
  int t = profile.t();
  require(t >= 1, "profile needs a type");
  DpTables tables;
  int m = static_cast<int>(profile.utilities[0].size());
  tables.m = m;
  tables.k_table.assign(m + 1, std::vector<int>(t, DpTables::kInfinity));
  for (int r = 0; r < t; ++r) {
    const Utility& u = profile.utilities[r];
    for (int j = 0; j <= m; ++j) {
      Rational acc = 0;
      int k = j;
      while (acc < profile.targets[r] && k < m) acc += u[k++];
      if (acc >= profile.targets[r]) tables.k_table[j][r] = k;
    }
  }

  int size = 1;
  for (int r = 0; r < t; ++r) {
    tables.radix.push_back(profile.counts[r] + 1);
    size *= profile.counts[r] + 1;
  }
  tables.T.assign(size, DpTables::kInfinity);
  tables.choice.assign(size, -1);
  tables.T[0] = 0;

  // Bucket H by its coordinate sum.
  std::vector<std::vector<int>> levels(
      std::accumulate(profile.counts.begin(), profile.counts.end(), 0) + 1);
  std::vector<std::vector<int>> coords(size);
  for (int idx = 0; idx < size; ++idx) {
    int rest = idx, sum = 0;
    for (int r = 0; r < t; ++r) {
      coords[idx].push_back(rest % tables.radix[r]);
      sum += coords[idx].back();
      rest /= tables.radix[r];
    }
    levels[sum].push_back(idx);
  }
  std::vector<int> stride(t, 1);
  for (int r = 1; r < t; ++r) stride[r] = stride[r - 1] * tables.radix[r - 1];

  for (std::size_t level = 1; level < levels.size(); ++level) {
    for (int idx : levels[level]) {
      for (int r = 0; r < t; ++r) {
        if (coords[idx][r] == 0) continue;
        int before = tables.T[idx - stride[r]];
        if (before == DpTables::kInfinity) continue;
        int k = tables.k_table[before][r];
        if (k == DpTables::kInfinity) continue;
        if (tables.T[idx] == DpTables::kInfinity || k < tables.T[idx]) {
          tables.T[idx] = k;
          tables.choice[idx] = r;
        }
      }
    }
  }
  return tables;
}

std::optional<DpPath> backtrack(const DpTables& tables,
                                const TypeProfile& profile) {
  int idx = tables.full_index();
  if (tables.T[idx] == DpTables::kInfinity) return std::nullopt;
  std::vector<int> stride(profile.t(), 1);
  for (int r = 1; r < profile.t(); ++r) {
    stride[r] = stride[r - 1] * tables.radix[r - 1];
  }
  DpPath path;
  while (idx != 0) {
    int r = tables.choice[idx];
    ensure(r >= 0, "broken back-pointer");
    int before = idx - stride[r];
    path.types.push_back(r);
    path.ranges.push_back({tables.T[before], tables.T[idx]});
    idx = before;
  }
  std::reverse(path.types.begin(), path.types.end());
  std::reverse(path.ranges.begin(), path.ranges.end());
  if (!path.ranges.empty()) path.ranges.back().second = tables.m;
  return path;
}

std::optional<Allocation> allocate_cycle_fixed_types(const Instance& inst) {
  require_cycle(inst);
  validate_instance(inst);
  std::vector<std::vector<int>> groups = type_groups(inst);
  int n = inst.n();
  int m = inst.m();
  if (n > m) return everything_to(inst, 0, "dp-types");

  TypeProfile base;
  for (const std::vector<int>& g : groups) {
    base.counts.push_back(static_cast<int>(g.size()));
    base.targets.push_back(mms_cycle(inst.agents[g.front()], n).value);
  }
  for (int e = 0; e < m; ++e) {
    std::vector<int> order = cycle_path_order(m, e);
    TypeProfile profile = base;
    for (const std::vector<int>& g : groups) {
      Utility u;
      for (int x : order) u.push_back(inst.agents[g.front()][x]);
      profile.utilities.push_back(std::move(u));
    }
    std::optional<DpPath> path = backtrack(build_dp_tables(profile), profile);
    if (!path) continue;
    Allocation alloc;
    alloc.provenance = "dp-types";
    alloc.bundles.assign(n, Bundle{});
    std::vector<std::size_t> used(groups.size(), 0);
    for (std::size_t b = 0; b < path->types.size(); ++b) {
      int r = path->types[b];
      Bundle bundle;
      for (int k = path->ranges[b].first; k < path->ranges[b].second; ++k) {
        bundle.push_back(order[k]);
      }
      std::sort(bundle.begin(), bundle.end());
      alloc.bundles[groups[r][used[r]++]] = std::move(bundle);
    }
    return alloc;
  }
  return std::nullopt;
}

}  // namespace mmsc
