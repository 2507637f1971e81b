#ifndef MMSC_ORACLE_HPP_
#define MMSC_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <optional>

#include "mmsc/model.hpp"

namespace mmsc {

struct OracleBudget {
  int max_cycle_goods = 24;
  int max_general_goods = 10;
  // Enumerated splits times n^2.
  std::int64_t max_work = 10'000'000;

  // Defaults, with max_work taken from MMSC_ORACLE_BUDGET when set.
  static OracleBudget from_env();
};

// Number of splits the enumeration for (g, n) visits.
std::int64_t oracle_split_count(const GoodsGraph& g, int n);

// Raises kOverBudget when (g, n) exceeds the budget.
void check_budget(const GoodsGraph& g, int n, const OracleBudget& budget);

// Visits every n-split of g (bundles padded with empties). Cycles and paths
// enumerate cut sets; other shapes enumerate set partitions into at most n
// connected blocks. The visitor returns false to stop early.
void enumerate_splits(const GoodsGraph& g, int n,
                      const std::function<bool(const Split&)>& visit,
                      const OracleBudget& budget = OracleBudget::from_env());

struct OracleMms {
  Rational value;
  Split split;
};

OracleMms oracle_mms(const GoodsGraph& g, const Utility& u, int n,
                     const OracleBudget& budget = OracleBudget::from_env());

// An mms-allocation if one exists.
std::optional<Allocation> oracle_exists(
    const Instance& inst,
    const OracleBudget& budget = OracleBudget::from_env());

struct OracleMaxC {
  // Every agent has mms zero: any split works for every c.
  bool unbounded = false;
  Rational value;
  Allocation witness;
};

OracleMaxC oracle_max_c(const Instance& inst,
                        const OracleBudget& budget = OracleBudget::from_env());

}  // namespace mmsc

#endif  // MMSC_ORACLE_HPP_
