#ifndef MMSC_EXACT_HPP_
#define MMSC_EXACT_HPP_

#include <optional>
#include <vector>

#include "mmsc/mms.hpp"
#include "mmsc/model.hpp"

namespace mmsc {

// Gives every listed agent a connected bundle of `tree` worth at least its
// threshold. Each threshold must admit a strong split of the tree into
// as many parts as there are agents. Result i belongs to agents[i].
std::vector<Bundle> allocate_subtree(const SubTree& tree,
                                     const std::vector<const Utility*>& agents,
                                     const std::vector<Rational>& thresholds);

Allocation allocate_tree(const Instance& inst);
Allocation allocate_one_deviant(const Instance& inst);
Allocation allocate_cycle_m_lt_2n(const Instance& inst);
// Empty when no mms-allocation exists.
std::optional<Allocation> decide_cycle_m_eq_2n(const Instance& inst);
Allocation allocate_three_agents_small(const Instance& inst);

// Gives good x to agent `owner` and tree-allocates the path C - x among the
// others at their thresholds (mms of the cycle with n agents).
Allocation singleton_then_path(const Instance& inst, int owner, int x,
                               const std::vector<Rational>& thresholds);

struct TypeProfile {
  // One utility per type, in path order.
  std::vector<Utility> utilities;
  std::vector<int> counts;
  std::vector<Rational> targets;

  int t() const { return static_cast<int>(counts.size()); }
};

struct DpTables {
  static constexpr int kInfinity = -1;
  int m = 0;
  // k_table[j][r]: smallest k >= j with goods j..k-1 worth >= targets[r].
  std::vector<std::vector<int>> k_table;
  // Mixed-radix index over H = (h_1..h_t), 0 <= h_r <= counts[r].
  std::vector<int> radix;
  std::vector<int> T;
  std::vector<int> choice;

  int index(const std::vector<int>& h) const;
  int full_index() const;
};

DpTables build_dp_tables(const TypeProfile& profile);

// Bundles along the path, in cut order, labeled with their type.
struct DpPath {
  std::vector<int> types;
  std::vector<std::pair<int, int>> ranges;  // [begin, end) in path order
};
std::optional<DpPath> backtrack(const DpTables& tables,
                                const TypeProfile& profile);

// Empty when no mms-allocation exists. Requires explicit types.
std::optional<Allocation> allocate_cycle_fixed_types(const Instance& inst);

// Distinct types as (type id order of first appearance) -> member agents.
std::vector<std::vector<int>> type_groups(const Instance& inst);

}  // namespace mmsc

#endif  // MMSC_EXACT_HPP_
