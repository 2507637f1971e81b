#include "mmsc/model.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mmsc/error.hpp"

namespace mmsc {

const char* shape_name(Shape shape) {
  switch (shape) {
    case Shape::kPath: return "path";
    case Shape::kCycle: return "cycle";
    case Shape::kTree: return "tree";
    case Shape::kUnicyclic: return "unicyclic";
    case Shape::kGeneral: return "general";
  }
  return "unknown";
}

std::optional<Shape> shape_from_name(const std::string& name) {
  for (Shape s : {Shape::kPath, Shape::kCycle, Shape::kTree, Shape::kUnicyclic,
                  Shape::kGeneral}) {
    if (name == shape_name(s)) return s;
  }
  return std::nullopt;
}

namespace {

std::vector<Edge> implicit_edges(Shape shape, int m) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  // A 2-cycle has a single (doubled) edge; a 1-cycle has none.
  if (shape == Shape::kCycle && m >= 3) edges.emplace_back(m - 1, 0);
  return edges;
}

bool connected(int m, const std::vector<std::vector<int>>& adj) {
  if (m == 0) return true;
  std::vector<char> seen(m, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == m;
}

}  // namespace

GoodsGraph::GoodsGraph(Shape shape, int m, std::vector<Edge> edges)
    : shape_(shape), m_(m), edges_(std::move(edges)), adjacency_(m) {
  for (auto [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

GoodsGraph GoodsGraph::path(int m) {
  if (m < 1) fail(ErrorCode::kPrecondition, "graph needs at least one good");
  return GoodsGraph(Shape::kPath, m, implicit_edges(Shape::kPath, m));
}

GoodsGraph GoodsGraph::cycle(int m) {
  if (m < 1) fail(ErrorCode::kPrecondition, "graph needs at least one good");
  return GoodsGraph(Shape::kCycle, m, implicit_edges(Shape::kCycle, m));
}

GoodsGraph GoodsGraph::from_edges(Shape shape, int m, std::vector<Edge> edges) {
  if (m < 1) fail(ErrorCode::kPrecondition, "graph needs at least one good");
  if (shape == Shape::kPath || shape == Shape::kCycle) {
    if (!edges.empty()) {
      fail(ErrorCode::kPrecondition,
           std::string(shape_name(shape)) + " edges are implicit");
    }
    return shape == Shape::kPath ? path(m) : cycle(m);
  }
  std::set<Edge> seen;
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= m || b >= m || a == b) {
      fail(ErrorCode::kPrecondition, "bad edge " + std::to_string(a) + " " +
                                         std::to_string(b));
    }
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      fail(ErrorCode::kPrecondition, "duplicate edge " + std::to_string(a) +
                                         " " + std::to_string(b));
    }
  }
  GoodsGraph g(shape, m, std::move(edges));
  if (!connected(m, g.adjacency_)) {
    fail(ErrorCode::kPrecondition, "graph is not connected");
  }
  int e = static_cast<int>(g.edges_.size());
  if (shape == Shape::kTree && e != m - 1) {
    fail(ErrorCode::kPrecondition, "tree must have m-1 edges");
  }
  if (shape == Shape::kUnicyclic && (e != m || m < 3)) {
    fail(ErrorCode::kPrecondition, "unicyclic graph must have m edges");
  }
  return g;
}

bool GoodsGraph::adjacent(int a, int b) const {
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

void validate_instance(const Instance& inst) {
  if (inst.n() < 1) fail(ErrorCode::kPrecondition, "need at least one agent");
  for (int i = 0; i < inst.n(); ++i) {
    const Utility& u = inst.agents[i];
    if (static_cast<int>(u.size()) != inst.m()) {
      fail(ErrorCode::kPrecondition,
           "agent " + std::to_string(i) + " has wrong utility length");
    }
    for (const Rational& x : u) {
      if (x < 0) {
        fail(ErrorCode::kPrecondition,
             "agent " + std::to_string(i) + " has a negative utility");
      }
    }
  }
  if (inst.types) {
    if (static_cast<int>(inst.types->size()) != inst.n()) {
      fail(ErrorCode::kPrecondition, "types line must list every agent");
    }
    std::map<int, int> first;
    for (int i = 0; i < inst.n(); ++i) {
      int t = (*inst.types)[i];
      if (t < 0) fail(ErrorCode::kPrecondition, "type ids must be >= 0");
      auto [it, fresh] = first.emplace(t, i);
      if (!fresh && inst.agents[it->second] != inst.agents[i]) {
        fail(ErrorCode::kPrecondition,
             "agents " + std::to_string(it->second) + " and " +
                 std::to_string(i) + " share a type but not utilities");
      }
    }
  }
}

Arc make_arc(int m, int start, int length) {
  if (length <= 0) return {};
  if (length > m) fail(ErrorCode::kMalformedBundle, "arc longer than cycle");
  return {((start % m) + m) % m, length};
}

int arc_last(int m, const Arc& arc) { return (arc.start + arc.length - 1) % m; }

bool arc_contains_good(int m, const Arc& arc, int good) {
  if (arc.empty()) return false;
  return ((good - arc.start) % m + m) % m < arc.length;
}

bool arc_subset(int m, const Arc& a, const Arc& b) {
  for (int k = 0; k < a.length; ++k) {
    if (!arc_contains_good(m, b, (a.start + k) % m)) return false;
  }
  return true;
}

std::vector<Arc> arc_intersection(int m, const Arc& a, const Arc& b) {
  std::vector<Arc> runs;
  int run_start = -1;
  for (int k = 0; k <= a.length; ++k) {
    bool in = k < a.length && arc_contains_good(m, b, (a.start + k) % m);
    if (in && run_start < 0) run_start = k;
    if (!in && run_start >= 0) {
      runs.push_back(make_arc(m, a.start + run_start, k - run_start));
      run_start = -1;
    }
  }
  if (a.length == m && runs.size() >= 2 && runs.front().start == a.start &&
      arc_last(m, runs.back()) == (a.start + m - 1) % m) {
    // The first and last runs meet across the start of a full-cycle arc.
    Arc merged = make_arc(m, runs.back().start,
                          runs.back().length + runs.front().length);
    runs.erase(runs.begin());
    runs.back() = merged;
  }
  return runs;
}

Bundle arc_goods(int m, const Arc& arc) {
  Bundle b;
  for (int k = 0; k < arc.length; ++k) b.push_back((arc.start + k) % m);
  std::sort(b.begin(), b.end());
  return b;
}

std::optional<Arc> bundle_as_arc(int m, const Bundle& bundle) {
  if (bundle.empty()) return Arc{};
  int len = static_cast<int>(bundle.size());
  if (len > m) return std::nullopt;
  std::vector<char> in(m, 0);
  for (int g : bundle) {
    if (g < 0 || g >= m || in[g]) return std::nullopt;
    in[g] = 1;
  }
  if (len == m) return Arc{0, m};
  for (int g : bundle) {
    if (!in[(g + m - 1) % m]) {
      for (int k = 0; k < len; ++k) {
        if (!in[(g + k) % m]) return std::nullopt;
      }
      return Arc{g, len};
    }
  }
  return std::nullopt;
}

Arc arc_between(int m, int from, int to) {
  return make_arc(m, from, ((to - from) % m + m) % m + 1);
}

Rational bundle_value(const Utility& u, const Bundle& bundle) {
  Rational sum = 0;
  for (int g : bundle) {
    if (g < 0 || g >= static_cast<int>(u.size())) {
      fail(ErrorCode::kMalformedBundle,
           "good " + std::to_string(g) + " out of range");
    }
    sum += u[g];
  }
  return sum;
}

Rational arc_value(const Utility& u, const Arc& arc) {
  int m = static_cast<int>(u.size());
  if (arc.length > m || arc.start < 0 || (m > 0 && arc.start >= m && arc.length > 0)) {
    fail(ErrorCode::kMalformedBundle, "arc out of range");
  }
  Rational sum = 0;
  for (int k = 0; k < arc.length; ++k) sum += u[(arc.start + k) % m];
  return sum;
}

Rational total_value(const Utility& u) {
  Rational sum = 0;
  for (const Rational& x : u) sum += x;
  return sum;
}

bool is_connected_bundle(const GoodsGraph& g, const Bundle& bundle) {
  if (bundle.empty()) return true;
  std::vector<char> in(g.m(), 0);
  for (int x : bundle) {
    if (x < 0 || x >= g.m() || in[x]) return false;
    in[x] = 1;
  }
  std::vector<char> seen(g.m(), 0);
  std::vector<int> stack{bundle.front()};
  seen[bundle.front()] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.adjacency()[v]) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == bundle.size();
}

bool validate_split(const GoodsGraph& g, const Split& split) {
  std::vector<int> owner(g.m(), -1);
  for (std::size_t i = 0; i < split.size(); ++i) {
    for (int x : split[i]) {
      if (x < 0 || x >= g.m() || owner[x] >= 0) return false;
      owner[x] = static_cast<int>(i);
    }
    if (!is_connected_bundle(g, split[i])) return false;
  }
  return std::all_of(owner.begin(), owner.end(), [](int o) { return o >= 0; });
}

Split arcs_to_split(int m, const std::vector<Arc>& arcs) {
  Split s;
  for (const Arc& a : arcs) s.push_back(arc_goods(m, a));
  return s;
}

GuaranteeReport build_report(const Instance& inst, const Allocation& alloc,
                             const std::vector<Rational>& mms_values,
                             const Rational& c) {
  ensure(static_cast<int>(alloc.bundles.size()) == inst.n(),
         "allocation has the wrong number of bundles");
  ensure(validate_split(inst.graph, alloc.bundles),
         "allocation is not a split of the goods");
  GuaranteeReport report;
  report.certified_c = c;
  for (int i = 0; i < inst.n(); ++i) {
    AgentReport a;
    a.mms = mms_values[i];
    a.value = bundle_value(inst.agents[i], alloc.bundles[i]);
    if (a.mms > 0) {
      a.ratio = Rational(a.value / a.mms);
      if (!report.min_ratio || *a.ratio < *report.min_ratio) {
        report.min_ratio = a.ratio;
      }
    }
    report.agents.push_back(a);
  }
  if (report.min_ratio) {
    ensure(c <= *report.min_ratio, "allocation falls below its guarantee");
  }
  return report;
}

Instance reverse_orientation(const Instance& inst) {
  if (inst.graph.shape() != Shape::kCycle) {
    fail(ErrorCode::kUnsupportedShape, "orientation reversal needs a cycle");
  }
  Instance out = inst;
  for (Utility& u : out.agents) std::reverse(u.begin(), u.end());
  return out;
}

Arc reverse_arc(int m, const Arc& arc) {
  if (arc.empty()) return arc;
  return make_arc(m, m - 1 - arc_last(m, arc), arc.length);
}

std::vector<std::vector<int>> identical_utility_groups(const Instance& inst) {
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < inst.n(); ++i) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) {
      return inst.agents[g.front()] == inst.agents[i];
    });
    if (it == groups.end()) {
      groups.push_back({i});
    } else {
      it->push_back(i);
    }
  }
  return groups;
}

}  // namespace mmsc
