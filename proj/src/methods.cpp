#include "mmsc/methods.hpp"

#include <algorithm>

#include "mmsc/csuff.hpp"
#include "mmsc/error.hpp"
#include "mmsc/exact.hpp"
#include "mmsc/regularize.hpp"

namespace mmsc {

namespace {

const std::vector<std::string> kExact = {
    "one-deviant", "tree", "m-lt-2n", "three-small", "m-eq-2n", "dp-types"};
// Also the tie-break order of the dispatcher.
const std::vector<std::string> kApprox = {
    "five-sixths", "three-types-34", "two-types-34", "t-types", "psi", "half"};

using Blocker = MethodBlocker;

std::optional<Blocker> shape_blocker(const Instance& inst, Shape want,
                                     const std::string& name) {
  if (inst.graph.shape() == want) return std::nullopt;
  return Blocker{ErrorCode::kUnsupportedShape,
                 name + " needs a " + shape_name(want) + " (got " +
                     shape_name(inst.graph.shape()) + ")"};
}

std::optional<Blocker> precondition(bool ok, const std::string& message) {
  if (ok) return std::nullopt;
  return Blocker{ErrorCode::kPrecondition, message};
}

std::optional<Blocker> find_blocker(const Instance& inst,
                                    const std::string& name) {
  int n = inst.n();
  int m = inst.m();
  if (name == "one-deviant") {
    int largest = 0;
    for (const auto& g : identical_utility_groups(inst)) {
      largest = std::max(largest, static_cast<int>(g.size()));
    }
    return precondition(n <= 1 || largest >= n - 1,
                        "one-deviant needs all but one agent to share a "
                        "utility function");
  }
  if (name == "tree") {
    Shape s = inst.graph.shape();
    if (s == Shape::kTree || s == Shape::kPath) return std::nullopt;
    return Blocker{ErrorCode::kUnsupportedShape,
                   std::string("tree needs a tree or path (got ") +
                       shape_name(s) + ")"};
  }
  if (auto b = shape_blocker(inst, Shape::kCycle, name)) return b;
  if (name == "m-lt-2n") {
    return precondition(m < 2 * n, "m-lt-2n needs m < 2n");
  }
  if (name == "m-eq-2n") {
    return precondition(m == 2 * n, "m-eq-2n needs m = 2n");
  }
  if (name == "three-small") {
    return precondition(n == 3 && m <= 8,
                        "three-small needs n = 3 and m <= 8");
  }
  if (name == "dp-types") {
    return precondition(inst.types.has_value(),
                        "dp-types needs an explicit types line");
  }
  if (name == "half" || name == "psi") return std::nullopt;
  if (name == "t-types") {
    return precondition(distinct_types(inst) >= 4,
                        "t-types needs at least four distinct utility rows");
  }
  if (name == "two-types-34") {
    return precondition(distinct_types(inst) <= 2,
                        "two-types-34 needs at most two distinct utility "
                        "rows");
  }
  if (name == "three-types-34") {
    return precondition(distinct_types(inst) <= 3,
                        "three-types-34 needs at most three distinct "
                        "utility rows");
  }
  if (name == "five-sixths") {
    return precondition(n == 3, "five-sixths needs exactly three agents");
  }
  fail(ErrorCode::kUsage, "unknown method '" + name + "'");
}

Allocation run_approx(const Instance& inst, const std::string& name) {
  if (name == "five-sixths") return five_sixths_three_agents(inst);
  if (name == "three-types-34") return three_quarters_three_types(inst);
  if (name == "two-types-34") return three_quarters_two_types(inst);
  if (name == "t-types") return t_over_2t2_sufficient(inst);
  if (name == "psi") return psi_sufficient(inst);
  return half_sufficient(inst);
}

std::optional<Allocation> run_exact(const Instance& inst,
                                    const std::string& name) {
  if (name == "one-deviant") return allocate_one_deviant(inst);
  if (name == "tree") return allocate_tree(inst);
  if (name == "m-lt-2n") return allocate_cycle_m_lt_2n(inst);
  if (name == "three-small") return allocate_three_agents_small(inst);
  if (name == "m-eq-2n") return decide_cycle_m_eq_2n(inst);
  return allocate_cycle_fixed_types(inst);
}

MethodOutcome run_checked(const Instance& inst, const std::string& name) {
  if (auto b = find_blocker(inst, name)) fail(b->code, b->message);
  MethodOutcome out;
  out.method = name;
  if (is_exact_method(name)) {
    out.allocation = run_exact(inst, name);
  } else {
    out.allocation = run_approx(inst, name);
  }
  if (out.allocation) {
    out.report = build_report(inst, *out.allocation, agent_mms(inst),
                              advertised_c(inst, name));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> all = kExact;
    all.insert(all.end(), kApprox.begin(), kApprox.end());
    return all;
  }();
  return names;
}

bool is_exact_method(const std::string& name) {
  return std::find(kExact.begin(), kExact.end(), name) != kExact.end();
}

std::optional<MethodBlocker> method_blocker(const Instance& inst,
                                            const std::string& name) {
  validate_instance(inst);
  return find_blocker(inst, name);
}

Rational advertised_c(const Instance& inst, const std::string& name) {
  if (is_exact_method(name)) return Rational(1);
  if (name == "five-sixths") return Rational(5, 6);
  if (name == "three-types-34" || name == "two-types-34") {
    return Rational(3, 4);
  }
  if (name == "t-types") return t_types_coefficient(distinct_types(inst));
  if (name == "psi") return psi_choice(inst.n()).c;
  if (name == "half") return Rational(1, 2);
  fail(ErrorCode::kUsage, "unknown method '" + name + "'");
}

std::vector<Rational> agent_mms(const Instance& inst,
                                const OracleBudget& budget) {
  if (inst.graph.shape() != Shape::kGeneral) return mms_values(inst);
  std::vector<Rational> out;
  for (const Utility& u : inst.agents) {
    out.push_back(oracle_mms(inst.graph, u, inst.n(), budget).value);
  }
  return out;
}

MethodOutcome run_method(const Instance& inst, const std::string& name) {
  validate_instance(inst);
  if (name == "auto") return best_guarantee(inst);
  return run_checked(inst, name);
}

MethodOutcome best_guarantee(const Instance& inst) {
  validate_instance(inst);
  for (const std::string& name : kExact) {
    if (find_blocker(inst, name)) continue;
    MethodOutcome out = run_checked(inst, name);
    if (out.allocation) return out;
  }
  const std::string* best = nullptr;
  Rational best_c;
  for (const std::string& name : kApprox) {
    if (find_blocker(inst, name)) continue;
    Rational c = advertised_c(inst, name);
    if (!best || c > best_c) {
      best = &name;
      best_c = c;
    }
  }
  if (!best) {
    fail(ErrorCode::kUnsupportedShape,
         std::string("no method applies to a ") +
             shape_name(inst.graph.shape()) + " instance");
  }
  return run_checked(inst, *best);
}

}  // namespace mmsc
