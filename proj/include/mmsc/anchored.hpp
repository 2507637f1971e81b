#ifndef MMSC_ANCHORED_HPP_
#define MMSC_ANCHORED_HPP_

#include <vector>

#include "mmsc/model.hpp"

namespace mmsc {

// Split of a cycle into non-empty arcs X_1..X_n listed clockwise, with the
// anchor in X_1 (index 0 here).
struct AnchoredSplit {
  int m = 0;
  int anchor = 0;
  std::vector<Arc> arcs;

  int n() const { return static_cast<int>(arcs.size()); }
  // Arc i with the index taken modulo n.
  const Arc& at(int i) const;
  // Clockwise distance from the anchor to the last good of X_i.
  int prefix_end(int i) const;
  // Goods from the anchor clockwise to the last good of X_i.
  Arc prefix_set(int i) const;
};

// `arcs` must be non-empty and partition the cycle, in any order.
AnchoredSplit anchor_split(int m, std::vector<Arc> arcs, int anchor);
// Clockwise order starting from the arc with the smallest start.
std::vector<Arc> clockwise(std::vector<Arc> arcs);
bool is_arc_partition(int m, const std::vector<Arc>& arcs);

// flags[i]: X_i is a jump to y, i.e. its prefix set lies in that of Y_i.
std::vector<char> jump_table(const AnchoredSplit& x, const AnchoredSplit& y);

enum class Source { kX, kY };

// Z_i is X_i or Y_i as given by z[i].
bool useful_sequence_check(const AnchoredSplit& x, const AnchoredSplit& y,
                           const std::vector<Source>& z);
std::vector<Arc> sequence_sets(const AnchoredSplit& x, const AnchoredSplit& y,
                               const std::vector<Source>& z);

struct ProperRelation {
  bool proper = false;
  // With both splits anchored alike: phase 0 means X_i lies in
  // Y_i u Y_{i+1}; phase 1 means X_i lies in Y_{i-1} u Y_i.
  int phase = -1;
};

ProperRelation proper_relative(const AnchoredSplit& x, const AnchoredSplit& y);
bool proper_relative(int m, const std::vector<Arc>& x,
                     const std::vector<Arc>& y);

// Rotates y (clockwise order) so that x[i] lies in y[i] u y[i+1] for all i.
// x and y must be proper relative to each other.
std::vector<Arc> align_after(int m, const std::vector<Arc>& x,
                             const std::vector<Arc>& y);

// Acceptable means worth at least 3/4.
bool acceptable(const Utility& u, const Arc& arc);

// For each pair (X_i, X_{i+1}) the index of a member acceptable to uy.
// Requires x, y proper relative to each other, y an mms split of a regular
// agent uy, and no piece of any X_i n Y_j acceptable to uy.
std::vector<int> every_second_acceptable(const AnchoredSplit& x,
                                         const AnchoredSplit& y,
                                         const Utility& uy);

}  // namespace mmsc

#endif  // MMSC_ANCHORED_HPP_
