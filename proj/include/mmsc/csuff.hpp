#ifndef MMSC_CSUFF_HPP_
#define MMSC_CSUFF_HPP_

#include <optional>
#include <vector>

#include "mmsc/model.hpp"
#include "mmsc/rational.hpp"

namespace mmsc {

// Outcome of the prefix protocol on a path. Bundles are goods (not path
// positions); unassigned agents have empty bundles.
struct ProtocolResult {
  std::vector<Bundle> bundles;
  std::vector<char> assigned;
  // Agents that had a c-strong (n-1)-split of P - Q at the start.
  std::vector<char> in_s;
  // Goods never handed out, a suffix of the path.
  Bundle leftover;
  // Agent that received the last prefix, -1 if none.
  int last = -1;

  bool complete() const;
};

// Hands out shortest c-worthy prefixes of `path`, preferring agents outside
// S. Q is the first q_length goods of the path. Needs at least two agents.
ProtocolResult allocate_protocol(const std::vector<const Utility*>& agents,
                                 const std::vector<int>& path, int q_length,
                                 const Rational& c);

// Greedy count of consecutive pieces worth at least c (the tail joins the
// last piece).
int strong_piece_count(const Utility& u, const std::vector<int>& order,
                       const Rational& c);

// On a regular cycle instance: q lies in a bundle of the mms split of each of
// the two largest type groups and is worth at least c to some agent. Returns
// a c-strong allocation (singleton escape, else the protocol from q).
Allocation lemma_intersection(const Instance& regular, const Arc& q,
                              const Rational& c);

Allocation half_sufficient(const Instance& inst);

// max over d >= n of min(n/d, n/(ceil(n^2/d)+n-2)) and its smallest argmax.
struct PsiChoice {
  int p = 1;
  Rational c;
};
PsiChoice psi_choice(int n);

// True when c >= (sqrt 5 - 1)/2, decided as (2c+1)^2 >= 5.
bool at_least_psi(const Rational& c);

struct PsiPlan {
  int p = 0;
  int h_hi = 0;
  int h_lo = 0;
  int r = 0;
  Rational c;
  // n^2 boundary edges; edge e joins goods e and e+1 mod m.
  std::vector<int> edges;
  // Positions in `edges` that are cut.
  std::vector<int> removed;
  // Parts between distinct cut edges, clockwise.
  std::vector<Arc> parts;
  Arc q;
};

// Needs a regular cycle instance with n >= 2.
PsiPlan psi_plan(const Instance& regular);
Allocation psi_sufficient(const Instance& inst);

// t/(2t-2).
Rational t_types_coefficient(int t);
// Number of distinct utility rows.
int distinct_types(const Instance& inst);
Allocation t_over_2t2_sufficient(const Instance& inst);

Allocation three_quarters_two_types(const Instance& inst);
Allocation three_quarters_three_types(const Instance& inst);

// Nine triple intersections of three 3-splits of a cycle, relabeled so that
// chunk k is A[(k+2)/3] n B[(k+1)/3] n C[k/3] (1-based, ceilings, mod 3).
struct ChunkGrid {
  // Relabeled splits.
  std::vector<Arc> a, b, c;
  std::vector<Bundle> chunks;
};
// Empty when no relabeling makes the chunks a split.
std::optional<ChunkGrid> chunk_grid(int m, const std::vector<Arc>& a,
                                    const std::vector<Arc>& b,
                                    const std::vector<Arc>& c);

Allocation five_sixths_three_agents(const Instance& inst);

}  // namespace mmsc

#endif  // MMSC_CSUFF_HPP_
