#ifndef MMSC_REGULARIZE_HPP_
#define MMSC_REGULARIZE_HPP_

#include <vector>

#include "mmsc/model.hpp"
#include "mmsc/rational.hpp"

namespace mmsc {

struct RegularizationCertificate {
  Instance original;
  // All agents have mms zero; `regular` is then a copy of the original.
  bool trivial = false;
  // Integer utilities w_i = scale_i * u_i and their mms values q_i.
  std::vector<std::vector<Integer>> scaled;
  std::vector<Integer> scale;
  std::vector<Integer> scaled_mms;
  // Zero-mms agents replaced by the first agent with positive mms.
  std::vector<std::vector<Integer>> substituted;
  // After lowering single goods while the mms stays q_i.
  std::vector<std::vector<Integer>> reduced;
};

struct Regularized {
  Instance regular;
  RegularizationCertificate certificate;
};

// Cycle or unicyclic graphs. Every agent of a non-trivial output has total
// value n and mms 1.
Regularized regularize(const Instance& inst);

// Reports `alloc` against the original utilities with certified_c = c.
// Raises kPrecondition unless alloc is c-sufficient on the regular instance.
GuaranteeReport pull_back(const Allocation& alloc,
                          const Regularized& reg, const Rational& c);

// mms of every agent, with n = number of agents.
std::vector<Rational> mms_values(const Instance& inst);

}  // namespace mmsc

#endif  // MMSC_REGULARIZE_HPP_
