#include "mmsc/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "mmsc/error.hpp"
#include "mmsc/matching.hpp"
#include "mmsc/mms.hpp"

namespace mmsc {

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Partitions of m labelled goods into between 1 and n blocks.
std::int64_t partitions_up_to(int m, int n) {
  std::vector<std::vector<std::int64_t>> s(m + 1,
                                           std::vector<std::int64_t>(m + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (int k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
  }
  std::int64_t total = 0;
  for (int k = 1; k <= std::min(n, m); ++k) total += s[m][k];
  return total;
}

bool uses_cuts(Shape shape) {
  return shape == Shape::kCycle || shape == Shape::kPath;
}

// Cut after good c for each c in cuts (ascending), on a cycle.
Split cycle_split_from_cuts(int m, int n, const std::vector<int>& cuts) {
  Split split;
  if (cuts.empty()) {
    Bundle all(m);
    std::iota(all.begin(), all.end(), 0);
    split.push_back(std::move(all));
  } else {
    int k = static_cast<int>(cuts.size());
    for (int j = 0; j < k; ++j) {
      int from = cuts[(j + k - 1) % k] + 1;
      int len = j == 0 ? cuts[0] + m - cuts[k - 1] : cuts[j] - cuts[j - 1];
      split.push_back(arc_goods(m, make_arc(m, from, len)));
    }
  }
  while (static_cast<int>(split.size()) < n) split.emplace_back();
  return split;
}

Split path_split_from_cuts(int m, int n, const std::vector<int>& cuts) {
  Split split;
  int from = 0;
  for (std::size_t j = 0; j <= cuts.size(); ++j) {
    int to = j < cuts.size() ? cuts[j] : m - 1;
    Bundle b;
    for (int x = from; x <= to; ++x) b.push_back(x);
    split.push_back(std::move(b));
    from = to + 1;
  }
  while (static_cast<int>(split.size()) < n) split.emplace_back();
  return split;
}

// Calls f on every k-subset of [0, universe) in lexicographic order.
bool for_each_subset(int universe, int k,
                     const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k > universe) return true;
  while (true) {
    if (!f(pick)) return false;
    int i = k - 1;
    while (i >= 0 && pick[i] == universe - k + i) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

void enumerate_partitions(const GoodsGraph& g, int n,
                          const std::function<bool(const Split&)>& visit) {
  int m = g.m();
  std::vector<int> label(m, 0);
  bool keep_going = true;
  std::function<void(int, int)> grow = [&](int v, int blocks) {
    if (!keep_going) return;
    if (v == m) {
      Split split(n);
      for (int x = 0; x < m; ++x) split[label[x]].push_back(x);
      for (int b = 0; b < blocks; ++b) {
        if (!is_connected_bundle(g, split[b])) return;
      }
      keep_going = visit(split);
      return;
    }
    for (int b = 0; b <= std::min(blocks, n - 1); ++b) {
      label[v] = b;
      grow(v + 1, std::max(blocks, b + 1));
    }
  };
  label[0] = 0;
  grow(1, 1);
}

struct Scaled {
  std::vector<std::vector<Integer>> w;  // per agent, per good
  std::vector<Integer> q;               // per agent, oracle mms (scaled)
};

std::vector<Integer> bundle_values(const std::vector<Integer>& w,
                                   const Split& split) {
  std::vector<Integer> out;
  out.reserve(split.size());
  for (const Bundle& b : split) {
    Integer s = 0;
    for (int x : b) s += w[x];
    out.push_back(s);
  }
  return out;
}

Scaled scale_instance(const Instance& inst, const OracleBudget& budget) {
  Scaled s;
  for (const Utility& u : inst.agents) {
    RescaledUtility r = rescale_to_integers(u);
    s.w.push_back(r.scaled);
  }
  s.q.assign(inst.n(), 0);
  enumerate_splits(
      inst.graph, inst.n(),
      [&](const Split& split) {
        for (int i = 0; i < inst.n(); ++i) {
          std::vector<Integer> v = bundle_values(s.w[i], split);
          Integer low = *std::min_element(v.begin(), v.end());
          if (low > s.q[i]) s.q[i] = low;
        }
        return true;
      },
      budget);
  return s;
}

Allocation assign(const Split& split, const std::vector<int>& bundle_of) {
  Allocation a;
  for (int b : bundle_of) a.bundles.push_back(split[b]);
  return a;
}

}  // namespace

OracleBudget OracleBudget::from_env() {
  OracleBudget b;
  if (const char* env = std::getenv("MMSC_ORACLE_BUDGET")) {
    try {
      b.max_work = std::stoll(env);
    } catch (const std::exception&) {
      fail(ErrorCode::kUsage, "MMSC_ORACLE_BUDGET is not an integer");
    }
  }
  return b;
}

std::int64_t oracle_split_count(const GoodsGraph& g, int n) {
  int m = g.m();
  if (g.shape() == Shape::kCycle) {
    std::int64_t count = 1;
    for (int k = 2; k <= std::min(n, m); ++k) count += binomial(m, k);
    return count;
  }
  if (g.shape() == Shape::kPath) {
    std::int64_t count = 0;
    for (int k = 0; k <= std::min(n, m) - 1; ++k) count += binomial(m - 1, k);
    return count;
  }
  return partitions_up_to(m, n);
}

void check_budget(const GoodsGraph& g, int n, const OracleBudget& budget) {
  int cap = uses_cuts(g.shape()) ? budget.max_cycle_goods
                                 : budget.max_general_goods;
  if (g.m() > cap) {
    fail(ErrorCode::kOverBudget,
         "oracle limit: m=" + std::to_string(g.m()) + " exceeds " +
             std::to_string(cap) + " goods for a " + shape_name(g.shape()));
  }
  std::int64_t work = oracle_split_count(g, n) * n * n;
  if (work > budget.max_work) {
    fail(ErrorCode::kOverBudget,
         "oracle limit: " + std::to_string(work) + " work units exceed " +
             std::to_string(budget.max_work));
  }
}

void enumerate_splits(const GoodsGraph& g, int n,
                      const std::function<bool(const Split&)>& visit,
                      const OracleBudget& budget) {
  if (n < 1) fail(ErrorCode::kPrecondition, "need at least one agent");
  check_budget(g, n, budget);
  int m = g.m();
  if (g.shape() == Shape::kCycle) {
    if (!visit(cycle_split_from_cuts(m, n, {}))) return;
    for (int k = 2; k <= std::min(n, m); ++k) {
      bool more = for_each_subset(m, k, [&](const std::vector<int>& cuts) {
        return visit(cycle_split_from_cuts(m, n, cuts));
      });
      if (!more) return;
    }
    return;
  }
  if (g.shape() == Shape::kPath) {
    for (int k = 0; k <= std::min(n, m) - 1; ++k) {
      bool more = for_each_subset(m - 1, k, [&](const std::vector<int>& cuts) {
        return visit(path_split_from_cuts(m, n, cuts));
      });
      if (!more) return;
    }
    return;
  }
  enumerate_partitions(g, n, visit);
}

OracleMms oracle_mms(const GoodsGraph& g, const Utility& u, int n,
                     const OracleBudget& budget) {
  RescaledUtility r = rescale_to_integers(u);
  OracleMms best;
  Integer best_low = -1;
  enumerate_splits(
      g, n,
      [&](const Split& split) {
        std::vector<Integer> v = bundle_values(r.scaled, split);
        Integer low = *std::min_element(v.begin(), v.end());
        if (low > best_low) {
          best_low = low;
          best.split = split;
        }
        return true;
      },
      budget);
  best.value = make_rational(best_low, r.scale);
  return best;
}

std::optional<Allocation> oracle_exists(const Instance& inst,
                                        const OracleBudget& budget) {
  Scaled s = scale_instance(inst, budget);
  int n = inst.n();
  std::optional<Allocation> found;
  enumerate_splits(
      inst.graph, n,
      [&](const Split& split) {
        std::vector<std::vector<char>> allowed(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i) {
          std::vector<Integer> v = bundle_values(s.w[i], split);
          for (int b = 0; b < n; ++b) allowed[i][b] = v[b] >= s.q[i];
        }
        if (auto match = perfect_matching(allowed)) {
          found = assign(split, *match);
          found->provenance = "oracle";
          return false;
        }
        return true;
      },
      budget);
  return found;
}

OracleMaxC oracle_max_c(const Instance& inst, const OracleBudget& budget) {
  Scaled s = scale_instance(inst, budget);
  int n = inst.n();
  OracleMaxC result;
  bool any_positive = std::any_of(s.q.begin(), s.q.end(),
                                  [](const Integer& q) { return q > 0; });
  if (!any_positive) {
    result.unbounded = true;
    enumerate_splits(
        inst.graph, n,
        [&](const Split& split) {
          std::vector<int> identity(n);
          std::iota(identity.begin(), identity.end(), 0);
          result.witness = assign(split, identity);
          return false;
        },
        budget);
    result.witness.provenance = "oracle";
    return result;
  }
  std::optional<Rational> best;
  enumerate_splits(
      inst.graph, n,
      [&](const Split& split) {
        std::vector<std::vector<Rational>> ratio(n);
        for (int i = 0; i < n; ++i) {
          std::vector<Integer> v = bundle_values(s.w[i], split);
          for (int b = 0; b < n; ++b) {
            ratio[i].push_back(s.q[i] > 0 ? make_rational(v[b], s.q[i]) : Rational(0));
          }
        }
        // Agents with zero mms accept every bundle.
        auto feasible = [&](const Rational& t, bool strict) {
          std::vector<std::vector<char>> allowed(n, std::vector<char>(n, 0));
          for (int i = 0; i < n; ++i) {
            for (int b = 0; b < n; ++b) {
              allowed[i][b] = s.q[i] == 0 ||
                              (strict ? ratio[i][b] > t : ratio[i][b] >= t);
            }
          }
          return perfect_matching(allowed);
        };
        if (best && !feasible(*best, true)) return true;
        std::vector<Rational> candidates;
        for (int i = 0; i < n; ++i) {
          if (s.q[i] == 0) continue;
          for (const Rational& r : ratio[i]) {
            if (!best || r > *best) candidates.push_back(r);
          }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()),
                         candidates.end());
        // The smallest candidate is always feasible here.
        std::size_t lo = 0;
        std::size_t hi = candidates.size() - 1;
        while (lo < hi) {
          std::size_t mid = (lo + hi + 1) / 2;
          if (feasible(candidates[mid], false)) {
            lo = mid;
          } else {
            hi = mid - 1;
          }
        }
        auto match = feasible(candidates[lo], false);
        ensure(match.has_value(), "bottleneck search lost its witness");
        best = candidates[lo];
        result.witness = assign(split, *match);
        return true;
      },
      budget);
  result.value = *best;
  result.witness.provenance = "oracle";
  return result;
}

}  // namespace mmsc
