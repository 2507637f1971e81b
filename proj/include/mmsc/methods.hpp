#ifndef MMSC_METHODS_HPP_
#define MMSC_METHODS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mmsc/error.hpp"
#include "mmsc/model.hpp"
#include "mmsc/oracle.hpp"

namespace mmsc {

// Exact methods first, then approximations; "auto" is not listed.
const std::vector<std::string>& method_names();
bool is_exact_method(const std::string& name);

struct MethodBlocker {
  // kUnsupportedShape or kPrecondition.
  ErrorCode code;
  std::string message;
};

// Empty when `name` applies to `inst`. Unknown names raise kUsage.
std::optional<MethodBlocker> method_blocker(const Instance& inst,
                                            const std::string& name);

// Guarantee the method certifies on `inst` (1 for exact methods).
Rational advertised_c(const Instance& inst, const std::string& name);

struct MethodOutcome {
  std::string method;
  // Empty when the method decides that no mms-allocation exists.
  std::optional<Allocation> allocation;
  std::optional<GuaranteeReport> report;
};

// mms of every agent; general graphs go through the oracle.
std::vector<Rational> agent_mms(
    const Instance& inst, const OracleBudget& budget = OracleBudget::from_env());

// Runs one method (or "auto"); inapplicable methods raise kPrecondition or
// kUnsupportedShape with the blocker as message.
MethodOutcome run_method(const Instance& inst, const std::string& name);

// Exact methods in order until one returns an allocation, then the
// applicable approximation with the largest advertised c.
MethodOutcome best_guarantee(const Instance& inst);

}  // namespace mmsc

#endif  // MMSC_METHODS_HPP_
