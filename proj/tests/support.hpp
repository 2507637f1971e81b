// Random instance builders and fixture loading shared by the test binaries.
#ifndef MMSC_TESTS_SUPPORT_HPP_
#define MMSC_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mmsc/instance_io.hpp"
#include "mmsc/model.hpp"

namespace mmsc::testing {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::string fixture_path(const std::string& name) {
  return std::string(MMSC_FIXTURE_DIR) + "/" + name;
}

inline Instance fixture(const std::string& name) {
  return load_instance(fixture_path(name));
}

// Row of m integers in [0, max_value]; zero_bias adds extra zeros.
inline Utility random_row(Rng& rng, int m, int max_value, int zero_bias = 0) {
  Utility u;
  for (int g = 0; g < m; ++g) {
    int v = pick(rng, 0, max_value);
    if (zero_bias > 0 && pick(rng, 0, 9) < zero_bias) v = 0;
    u.push_back(Rational(v));
  }
  return u;
}

// t = 0 gives each agent its own row and no types line; otherwise agent i
// has type i mod t and a types line is written.
inline Instance random_instance(Rng& rng, GoodsGraph graph, int n, int t,
                                int max_value, int zero_bias = 0) {
  Instance inst;
  int m = graph.m();
  inst.graph = std::move(graph);
  int rows = t == 0 ? n : t;
  std::vector<Utility> pool;
  for (int r = 0; r < rows; ++r) {
    pool.push_back(random_row(rng, m, max_value, zero_bias));
  }
  std::vector<int> types;
  for (int i = 0; i < n; ++i) {
    inst.agents.push_back(pool[i % rows]);
    types.push_back(i % rows);
  }
  if (t > 0) inst.types = types;
  return inst;
}

inline Instance random_cycle(Rng& rng, int m, int n, int t, int max_value,
                             int zero_bias = 0) {
  return random_instance(rng, GoodsGraph::cycle(m), n, t, max_value,
                         zero_bias);
}

inline GoodsGraph random_tree(Rng& rng, int m) {
  if (m <= 2) return GoodsGraph::path(m);
  std::vector<Edge> edges;
  for (int v = 1; v < m; ++v) edges.push_back({pick(rng, 0, v - 1), v});
  bool is_path = true;
  for (int v = 1; v < m; ++v) is_path &= edges[v - 1].first == v - 1;
  if (is_path) return GoodsGraph::path(m);
  return GoodsGraph::from_edges(Shape::kTree, m, edges);
}

// A cycle on the first k goods with random trees hanging off it.
inline GoodsGraph random_unicyclic(Rng& rng, int m) {
  int k = pick(rng, 3, std::max(3, m));
  if (k == m) return GoodsGraph::cycle(m);
  std::vector<Edge> edges;
  for (int v = 0; v < k; ++v) edges.push_back({v, (v + 1) % k});
  for (int v = k; v < m; ++v) edges.push_back({pick(rng, 0, v - 1), v});
  return GoodsGraph::from_edges(Shape::kUnicyclic, m, edges);
}

// n non-empty clockwise arcs partitioning a cycle of m >= n goods.
inline std::vector<Arc> random_arc_split(Rng& rng, int m, int n) {
  std::vector<int> cuts(m);
  std::iota(cuts.begin(), cuts.end(), 0);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(n);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Arc> arcs;
  for (int k = 0; k < n; ++k) {
    int from = cuts[k];
    int to = cuts[(k + 1) % n];
    int len = n == 1 ? m : (to - from + m) % m;
    arcs.push_back(make_arc(m, from, len));
  }
  return arcs;
}

// Proportional row: a random n-split of the cycle with every part worth
// `part` (spread randomly over its goods, zeros allowed).
inline Utility balanced_row(Rng& rng, int m, int n, int part) {
  Utility u(m, Rational(0));
  for (const Arc& a : random_arc_split(rng, m, n)) {
    for (int unit = 0; unit < part; ++unit) {
      u[(a.start + pick(rng, 0, a.length - 1)) % m] += 1;
    }
  }
  return u;
}

// Cycle instance whose t rows (t = 0: one per agent) are balanced rows.
inline Instance balanced_cycle(Rng& rng, int m, int n, int t, int part) {
  Instance inst = random_cycle(rng, m, n, t, 0);
  int rows = t == 0 ? n : t;
  std::vector<Utility> pool;
  for (int r = 0; r < rows; ++r) pool.push_back(balanced_row(rng, m, n, part));
  for (int i = 0; i < n; ++i) inst.agents[i] = pool[i % rows];
  return inst;
}

}  // namespace mmsc::testing

#endif  // MMSC_TESTS_SUPPORT_HPP_
