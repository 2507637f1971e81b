#ifndef MMSC_MMS_HPP_
#define MMSC_MMS_HPP_

#include <vector>

#include "mmsc/model.hpp"
#include "mmsc/rational.hpp"

namespace mmsc {

struct MmsResult {
  Rational value;
  // Every bundle is worth at least `value` to the agent.
  Split split;
};

struct RescaledUtility {
  std::vector<Integer> scaled;
  Integer scale;
};

// Multiplies by the LCM of the denominators.
RescaledUtility rescale_to_integers(const Utility& u);

// Can the goods, in this order, be cut into n consecutive pieces each worth
// at least q? Greedy sweep; q <= 0 is always feasible.
bool path_q_strong_feasible(const std::vector<Integer>& w, int n,
                            const Integer& q);

// Tree on a subset of goods with local vertex ids; local vertex 0 is the root.
struct SubTree {
  std::vector<int> goods;
  std::vector<std::vector<int>> adj;

  int size() const { return static_cast<int>(goods.size()); }
};

// Path through the goods in the given order.
SubTree path_subtree(const std::vector<int>& order);
// Subgraph of g induced by `goods` (first entry becomes the root) without
// the listed edges. Raises kInternal unless the result is a tree.
SubTree induced_subtree(const GoodsGraph& g, const std::vector<int>& goods,
                        const std::vector<Edge>& removed = {});

// Goods in path order for the path left after deleting cycle edge
// (g, g+1): g+1, g+2, ..., g.
std::vector<int> cycle_path_order(int m, int g);

MmsResult mms_path(const Utility& u, int n);
// Same as mms_path on the goods listed in `order`.
MmsResult mms_path_order(const Utility& u, const std::vector<int>& order,
                         int n);
MmsResult mms_tree(const GoodsGraph& tree, const Utility& u, int n);
MmsResult mms_subtree(const SubTree& tree, const Utility& u, int n);
MmsResult mms_cycle(const Utility& u, int n);
MmsResult mms_unicyclic(const GoodsGraph& g, const Utility& u, int n);

// Dispatches on the graph shape; general graphs are unsupported here.
MmsResult mms(const GoodsGraph& g, const Utility& u, int n);

// The mms value of integer utilities, as an integer (used by regularize).
Integer integer_mms(const GoodsGraph& g, const std::vector<Integer>& w, int n);

// Goods of the unique cycle of a unicyclic graph (or of a cycle), in
// traversal order starting from the smallest good.
std::vector<int> find_cycle(const GoodsGraph& g);

}  // namespace mmsc

#endif  // MMSC_MMS_HPP_
