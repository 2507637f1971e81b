#ifndef MMSC_MODEL_HPP_
#define MMSC_MODEL_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmsc/rational.hpp"

namespace mmsc {

enum class Shape { kPath, kCycle, kTree, kUnicyclic, kGeneral };

const char* shape_name(Shape shape);
std::optional<Shape> shape_from_name(const std::string& name);

using Edge = std::pair<int, int>;

// Connected graph on goods 0..m-1. Path and cycle edges are implicit:
// i -- i+1, and (m-1) -- 0 for a cycle.
class GoodsGraph {
 public:
  GoodsGraph() = default;

  static GoodsGraph path(int m);
  static GoodsGraph cycle(int m);
  // Validates connectivity and that the edge set matches the shape tag.
  static GoodsGraph from_edges(Shape shape, int m, std::vector<Edge> edges);

  int m() const { return m_; }
  Shape shape() const { return shape_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  bool adjacent(int a, int b) const;

 private:
  GoodsGraph(Shape shape, int m, std::vector<Edge> edges);

  Shape shape_ = Shape::kPath;
  int m_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

using Utility = std::vector<Rational>;

// A bundle is a sorted list of goods.
using Bundle = std::vector<int>;
using Split = std::vector<Bundle>;

struct Instance {
  GoodsGraph graph;
  std::vector<Utility> agents;
  // Optional type id per agent; agents sharing an id share utilities.
  std::optional<std::vector<int>> types;

  int m() const { return graph.m(); }
  int n() const { return static_cast<int>(agents.size()); }
};

// Checks utility lengths, non-negativity, n >= 1 and type consistency.
void validate_instance(const Instance& inst);

// Arc of a cycle (or path): goods start, start+1, ..., start+length-1 mod m.
// The empty arc is {0, 0}.
struct Arc {
  int start = 0;
  int length = 0;

  bool empty() const { return length == 0; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

Arc make_arc(int m, int start, int length);
// Last good of a non-empty arc.
int arc_last(int m, const Arc& arc);
bool arc_contains_good(int m, const Arc& arc, int good);
// a is a subset of b.
bool arc_subset(int m, const Arc& a, const Arc& b);
// Intersection as disjoint arcs, at most two.
std::vector<Arc> arc_intersection(int m, const Arc& a, const Arc& b);
Bundle arc_goods(int m, const Arc& arc);
// Arc form of a bundle on a cycle, if it is contiguous.
std::optional<Arc> bundle_as_arc(int m, const Bundle& bundle);
// Arc from `from` clockwise up to and including `to`.
Arc arc_between(int m, int from, int to);

Rational bundle_value(const Utility& u, const Bundle& bundle);
Rational arc_value(const Utility& u, const Arc& arc);
Rational total_value(const Utility& u);

bool is_connected_bundle(const GoodsGraph& g, const Bundle& bundle);
bool validate_split(const GoodsGraph& g, const Split& split);
Split arcs_to_split(int m, const std::vector<Arc>& arcs);

struct Allocation {
  // bundles[i] is the bundle of agent i.
  std::vector<Bundle> bundles;
  std::string provenance;
};

struct AgentReport {
  Rational mms;
  Rational value;
  // Empty when mms is zero: any bundle satisfies the agent.
  std::optional<Rational> ratio;
};

struct GuaranteeReport {
  std::vector<AgentReport> agents;
  Rational certified_c;
  // Smallest ratio over agents with positive mms.
  std::optional<Rational> min_ratio;
};

// Builds a report from precomputed mms values; raises kInternal when the
// allocation is not a split or some agent falls below c.
GuaranteeReport build_report(const Instance& inst, const Allocation& alloc,
                             const std::vector<Rational>& mms_values,
                             const Rational& c);

// Mirror image of a cycle instance: good i becomes m-1-i.
Instance reverse_orientation(const Instance& inst);
Arc reverse_arc(int m, const Arc& arc);

// Groups agents with identical utility vectors; groups are ordered by their
// smallest member.
std::vector<std::vector<int>> identical_utility_groups(const Instance& inst);

}  // namespace mmsc

#endif  // MMSC_MODEL_HPP_
