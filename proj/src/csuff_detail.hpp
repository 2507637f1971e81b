#ifndef MMSC_SRC_CSUFF_DETAIL_HPP_
#define MMSC_SRC_CSUFF_DETAIL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mmsc/model.hpp"
#include "mmsc/regularize.hpp"

namespace mmsc::detail {

void require_cycle(const Instance& inst, const char* method);

// Clockwise arcs of the cycle mms split of a regular agent.
std::vector<Arc> regular_split_arcs(const Utility& u, int n);

// Some good worth c to some agent: that agent takes it, the rest of the
// cycle is tree-allocated at threshold one.
std::optional<Allocation> singleton_escape(const Instance& regular,
                                           const Rational& c);

// Pairwise disjoint non-empty arcs, one per agent: matches agents to arcs
// worth at least c, then grows each arc clockwise up to the next one.
std::optional<Allocation> assemble_family(const Instance& regular,
                                          const std::vector<Arc>& family,
                                          const Rational& c);

// Type groups by size, largest first; ties keep the smaller first agent.
std::vector<std::vector<int>> sorted_groups(const Instance& inst);

// Agents of the regular instance in `alloc` order, checked and pulled back.
Allocation finish(const Regularized& reg, Allocation alloc, const Rational& c,
                  const std::string& provenance);

Allocation everything_to_first(const Instance& inst,
                               const std::string& provenance);

// Constructions on regular instances.
Allocation two_types_regular(const Instance& regular);
Allocation three_types_regular(const Instance& regular);

}  // namespace mmsc::detail

#endif  // MMSC_SRC_CSUFF_DETAIL_HPP_
