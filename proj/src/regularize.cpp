#include "mmsc/regularize.hpp"

#include <map>

#include "mmsc/error.hpp"
#include "mmsc/mms.hpp"

namespace mmsc {
namespace {

class MmsCache {
 public:
  MmsCache(const GoodsGraph& g, int n) : g_(g), n_(n) {}

  const Integer& operator()(const std::vector<Integer>& w) {
    auto it = cache_.find(w);
    if (it == cache_.end()) {
      it = cache_.emplace(w, integer_mms(g_, w, n_)).first;
    }
    return it->second;
  }

 private:
  const GoodsGraph& g_;
  int n_;
  std::map<std::vector<Integer>, Integer> cache_;
};

// Lowers single goods, ascending, to the smallest value keeping mms == q.
// One pass reaches the fixpoint since lowering other goods never lets a
// good go lower; the second pass only confirms it.
std::vector<Integer> reduce(std::vector<Integer> v, const Integer& q,
                            MmsCache& mms_of) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < v.size(); ++x) {
      Integer lo = 0;
      Integer hi = v[x];
      Integer keep = v[x];
      while (lo < hi) {
        Integer mid = (lo + hi) / 2;
        v[x] = mid;
        if (mms_of(v) == q) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      v[x] = hi;
      if (hi != keep) changed = true;
    }
  }
  return v;
}

bool ratio_at_least(const Rational& value, const Rational& mms,
                    const Rational& c) {
  return sgn(mms) == 0 || value >= c * mms;
}

}  // namespace

std::vector<Rational> mms_values(const Instance& inst) {
  std::vector<Rational> out;
  out.reserve(inst.agents.size());
  for (const Utility& u : inst.agents) {
    out.push_back(mms(inst.graph, u, inst.n()).value);
  }
  return out;
}

Regularized regularize(const Instance& inst) {
  Shape shape = inst.graph.shape();
  if (shape != Shape::kCycle && shape != Shape::kUnicyclic) {
    fail(ErrorCode::kUnsupportedShape,
         "regularization needs a cycle or unicyclic graph");
  }
  validate_instance(inst);
  int n = inst.n();
  Regularized out;
  RegularizationCertificate& cert = out.certificate;
  cert.original = inst;
  MmsCache mms_of(inst.graph, n);

  int positive = -1;
  for (int i = 0; i < n; ++i) {
    RescaledUtility r = rescale_to_integers(inst.agents[i]);
    cert.scaled.push_back(r.scaled);
    cert.scale.push_back(r.scale);
    cert.scaled_mms.push_back(mms_of(r.scaled));
    if (positive < 0 && sgn(cert.scaled_mms.back()) > 0) positive = i;
  }
  if (positive < 0) {
    cert.trivial = true;
    out.regular = inst;
    return out;
  }

  out.regular.graph = inst.graph;
  out.regular.types = inst.types;
  std::map<std::vector<Integer>, std::vector<Integer>> reduced_of;
  for (int i = 0; i < n; ++i) {
    bool zero = sgn(cert.scaled_mms[i]) == 0;
    const std::vector<Integer>& v = zero ? cert.scaled[positive]
                                         : cert.scaled[i];
    const Integer& q = zero ? cert.scaled_mms[positive] : cert.scaled_mms[i];
    cert.substituted.push_back(v);
    auto it = reduced_of.find(v);
    if (it == reduced_of.end()) {
      it = reduced_of.emplace(v, reduce(v, q, mms_of)).first;
    }
    const std::vector<Integer>& r = it->second;
    cert.reduced.push_back(r);

    Integer total = 0;
    for (const Integer& x : r) total += x;
    ensure(total == q * n, "reduced utility is not proportional");
    Utility u;
    u.reserve(r.size());
    for (const Integer& x : r) u.push_back(make_rational(x, q));
    out.regular.agents.push_back(std::move(u));
  }
  // Zero-mms agents may now share a row with another type id.
  if (out.regular.types) {
    std::map<int, int> first_of_type;
    for (int i = 0; i < n; ++i) {
      int t = (*out.regular.types)[i];
      auto [it, fresh] = first_of_type.emplace(t, i);
      ensure(fresh || out.regular.agents[it->second] == out.regular.agents[i],
             "regularization split a type");
    }
  }
  return out;
}

GuaranteeReport pull_back(const Allocation& alloc, const Regularized& reg,
                          const Rational& c) {
  const Instance& original = reg.certificate.original;
  require(static_cast<int>(alloc.bundles.size()) == original.n(),
          "allocation has the wrong number of bundles");
  require(validate_split(original.graph, alloc.bundles),
          "allocation is not a split of the graph");
  if (!reg.certificate.trivial) {
    for (int i = 0; i < original.n(); ++i) {
      Rational v = bundle_value(reg.regular.agents[i], alloc.bundles[i]);
      require(v >= c, "allocation is not c-sufficient on the regular "
                      "instance (agent " + std::to_string(i) + ")");
    }
  }
  std::vector<Rational> values;
  for (int i = 0; i < original.n(); ++i) {
    values.push_back(Rational(reg.certificate.scaled_mms[i]) /
                     reg.certificate.scale[i]);
  }
  for (int i = 0; i < original.n(); ++i) {
    ensure(ratio_at_least(bundle_value(original.agents[i], alloc.bundles[i]),
                          values[i], c),
           "pull-back lost c-sufficiency");
  }
  return build_report(original, alloc, values, c);
}

}  // namespace mmsc
