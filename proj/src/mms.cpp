#include "mmsc/mms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mmsc/error.hpp"

namespace mmsc {

namespace {

using Adjacency = std::vector<std::vector<int>>;

// Largest q in [0, hi] with feasible(q); feasible is monotone and holds at 0.
Integer largest_feasible(const Integer& hi,
                         const std::function<bool(const Integer&)>& feasible) {
  Integer p = 0;
  Integer r = hi;
  while (p < r) {
    Integer k = ceil_div(p + r, 2);
    if (feasible(k)) {
      p = k;
    } else {
      r = k - 1;
    }
  }
  return p;
}

Integer sum_of(const std::vector<Integer>& w) {
  Integer s = 0;
  for (const Integer& x : w) s += x;
  return s;
}

std::vector<Integer> gather(const std::vector<Integer>& w,
                            const std::vector<int>& goods) {
  std::vector<Integer> out;
  out.reserve(goods.size());
  for (int g : goods) out.push_back(w[g]);
  return out;
}

int greedy_count(const std::vector<Integer>& w, const Integer& q) {
  int count = 0;
  Integer acc = 0;
  for (const Integer& x : w) {
    acc += x;
    if (acc >= q) {
      ++count;
      acc = 0;
    }
  }
  return count;
}

// Greedy split of the ordered goods at threshold q into exactly n bundles.
Split path_split(const std::vector<int>& order, const std::vector<Integer>& w,
                 int n, const Integer& q) {
  Split split;
  Bundle current;
  Integer acc = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    current.push_back(order[i]);
    acc += w[i];
    if (static_cast<int>(split.size()) < n - 1 && acc >= q) {
      split.push_back(std::move(current));
      current.clear();
      acc = 0;
    }
  }
  split.push_back(std::move(current));
  while (static_cast<int>(split.size()) < n) split.emplace_back();
  for (Bundle& b : split) std::sort(b.begin(), b.end());
  return split;
}

Integer path_value(const std::vector<Integer>& w, int n) {
  return largest_feasible(floor_div(sum_of(w), n), [&](const Integer& q) {
    return path_q_strong_feasible(w, n, q);
  });
}

struct Rooted {
  std::vector<int> parent;
  std::vector<int> post;  // children before parents
};

Rooted root_at_zero(const Adjacency& adj) {
  int size = static_cast<int>(adj.size());
  Rooted r;
  r.parent.assign(size, -1);
  std::vector<int> pre;
  std::vector<int> stack{0};
  std::vector<char> seen(size, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    pre.push_back(v);
    for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it) {
      if (!seen[*it]) {
        seen[*it] = 1;
        r.parent[*it] = v;
        stack.push_back(*it);
      }
    }
  }
  ensure(static_cast<int>(pre.size()) == size, "tree is not connected");
  r.post.assign(pre.rbegin(), pre.rend());
  return r;
}

// Bottom-up greedy: marks vertices where a component is cut off.
std::vector<char> tree_cuts(const Adjacency& adj, const Rooted& rooted,
                            const std::vector<Integer>& w, const Integer& q,
                            int* count) {
  std::vector<Integer> acc(w);
  std::vector<char> cut(adj.size(), 0);
  *count = 0;
  for (int v : rooted.post) {
    for (int c : adj[v]) {
      if (c != rooted.parent[v] && !cut[c]) acc[v] += acc[c];
    }
    if (acc[v] >= q) {
      cut[v] = 1;
      ++*count;
    }
  }
  return cut;
}

bool tree_feasible(const Adjacency& adj, const Rooted& rooted,
                   const std::vector<Integer>& w, int n, const Integer& q) {
  if (q <= 0) return true;
  int count = 0;
  tree_cuts(adj, rooted, w, q, &count);
  return count >= n;
}

Integer tree_value(const Adjacency& adj, const std::vector<Integer>& w, int n) {
  Rooted rooted = root_at_zero(adj);
  return largest_feasible(floor_div(sum_of(w), n), [&](const Integer& q) {
    return tree_feasible(adj, rooted, w, n, q);
  });
}

// Exactly n components (local vertex lists, padded with empties), each
// worth at least q when q is feasible.
std::vector<std::vector<int>> tree_components(const Adjacency& adj,
                                              const std::vector<Integer>& w,
                                              int n, const Integer& q) {
  int size = static_cast<int>(adj.size());
  Rooted rooted = root_at_zero(adj);
  int count = 0;
  std::vector<char> cut = tree_cuts(adj, rooted, w, q, &count);
  bool root_leftover = !cut[0];
  cut[0] = 1;  // the root always heads a component
  auto components_now = [&] {
    return static_cast<int>(std::count(cut.begin(), cut.end(), 1));
  };
  auto head_of = [&](int v) {
    while (!cut[v]) v = rooted.parent[v];
    return v;
  };
  auto top_level = [&] {
    // Cut vertices whose nearest cut ancestor is the root.
    std::vector<int> out;
    for (int v = 1; v < size; ++v) {
      if (cut[v] && head_of(rooted.parent[v]) == 0) out.push_back(v);
    }
    return out;
  };
  if (root_leftover && components_now() > 1) {
    // The root piece is worth less than q: absorb one top-level component.
    cut[top_level().front()] = 0;
  }
  while (components_now() > n) {
    std::vector<int> top = top_level();
    ensure(!top.empty(), "tree split cannot be reduced");
    cut[top.front()] = 0;
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> index(size, -1);
  for (int v = 0; v < size; ++v) {
    if (cut[v]) {
      index[v] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
  }
  for (int v = 0; v < size; ++v) comps[index[head_of(v)]].push_back(v);
  while (static_cast<int>(comps.size()) < n) comps.emplace_back();
  return comps;
}

std::vector<Integer> local_weights(const SubTree& t,
                                   const std::vector<Integer>& w) {
  return gather(w, t.goods);
}

Split map_components(const SubTree& t,
                     const std::vector<std::vector<int>>& comps) {
  Split split;
  for (const auto& c : comps) {
    Bundle b;
    for (int v : c) b.push_back(t.goods[v]);
    std::sort(b.begin(), b.end());
    split.push_back(std::move(b));
  }
  return split;
}

bool cycle_feasible(const std::vector<Integer>& w, int n, const Integer& q) {
  int m = static_cast<int>(w.size());
  for (int g = 0; g < m; ++g) {
    if (path_q_strong_feasible(gather(w, cycle_path_order(m, g)), n, q)) {
      return true;
    }
  }
  return false;
}

Integer cycle_value(const std::vector<Integer>& w, int n) {
  if (n == 1) return sum_of(w);
  return largest_feasible(floor_div(sum_of(w), n), [&](const Integer& q) {
    return cycle_feasible(w, n, q);
  });
}

struct UnicyclicPlan {
  std::vector<int> cycle;
  std::vector<Integer> tree_values;  // per deleted cycle edge
  Integer contracted_value;
};

// Contracted tree: local vertex 0 is the cycle, then the other goods.
struct Contracted {
  Adjacency adj;
  std::vector<int> local_of;  // good -> local vertex
  std::vector<int> good_of;   // local vertex -> good (-1 for the supernode)
};

Contracted contract_cycle(const GoodsGraph& g, const std::vector<int>& cycle) {
  Contracted c;
  c.local_of.assign(g.m(), -1);
  for (int x : cycle) c.local_of[x] = 0;
  c.good_of.push_back(-1);
  for (int x = 0; x < g.m(); ++x) {
    if (c.local_of[x] < 0) {
      c.local_of[x] = static_cast<int>(c.good_of.size());
      c.good_of.push_back(x);
    }
  }
  c.adj.assign(c.good_of.size(), {});
  for (auto [a, b] : g.edges()) {
    int la = c.local_of[a];
    int lb = c.local_of[b];
    if (la == lb) continue;
    c.adj[la].push_back(lb);
    c.adj[lb].push_back(la);
  }
  for (auto& list : c.adj) std::sort(list.begin(), list.end());
  return c;
}

std::vector<Integer> contracted_weights(const Contracted& c,
                                        const std::vector<Integer>& w) {
  std::vector<Integer> out(c.good_of.size(), 0);
  for (std::size_t x = 0; x < w.size(); ++x) out[c.local_of[x]] += w[x];
  return out;
}

Edge cycle_edge(const std::vector<int>& cycle, std::size_t i) {
  return {cycle[i], cycle[(i + 1) % cycle.size()]};
}

std::vector<int> all_goods(int m) {
  std::vector<int> goods(m);
  std::iota(goods.begin(), goods.end(), 0);
  return goods;
}

UnicyclicPlan plan_unicyclic(const GoodsGraph& g, const std::vector<Integer>& w,
                             int n) {
  UnicyclicPlan plan;
  plan.cycle = find_cycle(g);
  std::vector<int> goods = all_goods(g.m());
  for (std::size_t i = 0; i < plan.cycle.size(); ++i) {
    SubTree t = induced_subtree(g, goods, {cycle_edge(plan.cycle, i)});
    plan.tree_values.push_back(tree_value(t.adj, local_weights(t, w), n));
  }
  Contracted c = contract_cycle(g, plan.cycle);
  plan.contracted_value = tree_value(c.adj, contracted_weights(c, w), n);
  return plan;
}

Integer unicyclic_value(const GoodsGraph& g, const std::vector<Integer>& w,
                        int n) {
  UnicyclicPlan plan = plan_unicyclic(g, w, n);
  Integer best = plan.contracted_value;
  for (const Integer& v : plan.tree_values) best = std::max(best, v);
  return best;
}

MmsResult to_result(const Integer& q, const Integer& scale, Split split) {
  return {make_rational(q, scale), std::move(split)};
}

void require_agents(int n) {
  if (n < 1) fail(ErrorCode::kPrecondition, "need at least one agent");
}

}  // namespace

RescaledUtility rescale_to_integers(const Utility& u) {
  RescaledUtility r;
  r.scale = denominator_lcm(u);
  for (const Rational& x : u) {
    Rational scaled = x * r.scale;
    r.scaled.push_back(scaled.get_num());
  }
  return r;
}

bool path_q_strong_feasible(const std::vector<Integer>& w, int n,
                            const Integer& q) {
  if (q <= 0) return true;
  return greedy_count(w, q) >= n;
}

SubTree path_subtree(const std::vector<int>& order) {
  SubTree t;
  t.goods = order;
  t.adj.assign(order.size(), {});
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    t.adj[i].push_back(static_cast<int>(i + 1));
    t.adj[i + 1].push_back(static_cast<int>(i));
  }
  return t;
}

SubTree induced_subtree(const GoodsGraph& g, const std::vector<int>& goods,
                        const std::vector<Edge>& removed) {
  SubTree t;
  t.goods = goods;
  std::vector<int> local(g.m(), -1);
  for (std::size_t i = 0; i < goods.size(); ++i) {
    local[goods[i]] = static_cast<int>(i);
  }
  auto is_removed = [&](int a, int b) {
    for (auto [x, y] : removed) {
      if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
  };
  t.adj.assign(goods.size(), {});
  int edges = 0;
  for (auto [a, b] : g.edges()) {
    if (local[a] < 0 || local[b] < 0 || is_removed(a, b)) continue;
    t.adj[local[a]].push_back(local[b]);
    t.adj[local[b]].push_back(local[a]);
    ++edges;
  }
  for (auto& list : t.adj) std::sort(list.begin(), list.end());
  ensure(goods.empty() || edges + 1 == static_cast<int>(goods.size()),
         "induced subgraph is not a tree");
  if (!goods.empty()) root_at_zero(t.adj);
  return t;
}

std::vector<int> cycle_path_order(int m, int g) {
  std::vector<int> order;
  for (int k = 1; k <= m; ++k) order.push_back((g + k) % m);
  return order;
}

MmsResult mms_path_order(const Utility& u, const std::vector<int>& order,
                         int n) {
  require_agents(n);
  RescaledUtility r = rescale_to_integers(u);
  std::vector<Integer> w = gather(r.scaled, order);
  Integer q = path_value(w, n);
  return to_result(q, r.scale, path_split(order, w, n, q));
}

MmsResult mms_path(const Utility& u, int n) {
  return mms_path_order(u, all_goods(static_cast<int>(u.size())), n);
}

MmsResult mms_subtree(const SubTree& tree, const Utility& u, int n) {
  require_agents(n);
  RescaledUtility r = rescale_to_integers(u);
  std::vector<Integer> w = local_weights(tree, r.scaled);
  Integer q = tree_value(tree.adj, w, n);
  return to_result(q, r.scale,
                   map_components(tree, tree_components(tree.adj, w, n, q)));
}

MmsResult mms_tree(const GoodsGraph& tree, const Utility& u, int n) {
  if (tree.shape() != Shape::kTree && tree.shape() != Shape::kPath) {
    fail(ErrorCode::kUnsupportedShape, "mms_tree needs a tree");
  }
  return mms_subtree(induced_subtree(tree, all_goods(tree.m())), u, n);
}

MmsResult mms_cycle(const Utility& u, int n) {
  require_agents(n);
  int m = static_cast<int>(u.size());
  RescaledUtility r = rescale_to_integers(u);
  if (n == 1) {
    return to_result(sum_of(r.scaled), r.scale, {all_goods(m)});
  }
  Integer q = cycle_value(r.scaled, n);
  for (int g = 0; g < m; ++g) {
    std::vector<int> order = cycle_path_order(m, g);
    std::vector<Integer> w = gather(r.scaled, order);
    if (path_q_strong_feasible(w, n, q)) {
      return to_result(q, r.scale, path_split(order, w, n, q));
    }
  }
  fail(ErrorCode::kInternal, "no cycle rotation reaches the mms value");
}

MmsResult mms_unicyclic(const GoodsGraph& g, const Utility& u, int n) {
  if (g.shape() == Shape::kCycle) return mms_cycle(u, n);
  if (g.shape() != Shape::kUnicyclic) {
    fail(ErrorCode::kUnsupportedShape, "mms_unicyclic needs a unicyclic graph");
  }
  require_agents(n);
  RescaledUtility r = rescale_to_integers(u);
  UnicyclicPlan plan = plan_unicyclic(g, r.scaled, n);
  Integer best = plan.contracted_value;
  for (const Integer& v : plan.tree_values) best = std::max(best, v);
  std::vector<int> goods = all_goods(g.m());
  for (std::size_t i = 0; i < plan.cycle.size(); ++i) {
    if (plan.tree_values[i] != best) continue;
    SubTree t = induced_subtree(g, goods, {cycle_edge(plan.cycle, i)});
    std::vector<Integer> w = local_weights(t, r.scaled);
    return to_result(best, r.scale,
                     map_components(t, tree_components(t.adj, w, n, best)));
  }
  Contracted c = contract_cycle(g, plan.cycle);
  auto comps = tree_components(c.adj, contracted_weights(c, r.scaled), n, best);
  Split split;
  for (const auto& comp : comps) {
    Bundle b;
    for (int v : comp) {
      if (v == 0) {
        b.insert(b.end(), plan.cycle.begin(), plan.cycle.end());
      } else {
        b.push_back(c.good_of[v]);
      }
    }
    std::sort(b.begin(), b.end());
    split.push_back(std::move(b));
  }
  return to_result(best, r.scale, std::move(split));
}

MmsResult mms(const GoodsGraph& g, const Utility& u, int n) {
  switch (g.shape()) {
    case Shape::kPath: return mms_path(u, n);
    case Shape::kTree: return mms_tree(g, u, n);
    case Shape::kCycle: return mms_cycle(u, n);
    case Shape::kUnicyclic: return mms_unicyclic(g, u, n);
    case Shape::kGeneral: break;
  }
  fail(ErrorCode::kUnsupportedShape,
       "mms on a general graph needs the oracle");
}

Integer integer_mms(const GoodsGraph& g, const std::vector<Integer>& w, int n) {
  require_agents(n);
  switch (g.shape()) {
    case Shape::kPath: return path_value(w, n);
    case Shape::kTree: {
      SubTree t = induced_subtree(g, all_goods(g.m()));
      return tree_value(t.adj, w, n);
    }
    case Shape::kCycle: return cycle_value(w, n);
    case Shape::kUnicyclic: return unicyclic_value(g, w, n);
    case Shape::kGeneral: break;
  }
  fail(ErrorCode::kUnsupportedShape,
       "mms on a general graph needs the oracle");
}

std::vector<int> find_cycle(const GoodsGraph& g) {
  if (g.shape() == Shape::kCycle) return all_goods(g.m());
  int m = g.m();
  std::vector<int> degree(m);
  for (int v = 0; v < m; ++v) {
    degree[v] = static_cast<int>(g.adjacency()[v].size());
  }
  std::vector<char> removed(m, 0);
  std::vector<int> leaves;
  for (int v = 0; v < m; ++v) {
    if (degree[v] <= 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    int v = leaves.back();
    leaves.pop_back();
    if (removed[v]) continue;
    removed[v] = 1;
    for (int w : g.adjacency()[v]) {
      if (!removed[w] && --degree[w] == 1) leaves.push_back(w);
    }
  }
  std::vector<int> cycle;
  int start = -1;
  for (int v = 0; v < m && start < 0; ++v) {
    if (!removed[v]) start = v;
  }
  ensure(start >= 0, "graph has no cycle");
  int prev = -1;
  int cur = start;
  do {
    cycle.push_back(cur);
    int next = -1;
    for (int w : g.adjacency()[cur]) {
      if (!removed[w] && w != prev) {
        next = w;
        break;
      }
    }
    ensure(next >= 0, "cycle walk is stuck");
    prev = cur;
    cur = next;
  } while (cur != start);
  return cycle;
}

}  // namespace mmsc
