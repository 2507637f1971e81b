#include "mmsc/mmsc.h"

#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "mmsc/csuff.hpp"
#include "mmsc/error.hpp"
#include "mmsc/instance_io.hpp"
#include "mmsc/methods.hpp"
#include "mmsc/mms.hpp"
#include "mmsc/oracle.hpp"

struct mmsc_instance {
  mmsc::Instance inst;
  std::string text;
};

struct mmsc_result {
  mmsc::Shape shape = mmsc::Shape::kCycle;
  int m = 0;
  std::optional<std::string> value;
  bool unbounded = false;
  std::string method;
  std::string provenance;
  std::vector<mmsc::Bundle> bundles;
  bool has_report = false;
  std::vector<std::string> agent_mms;
  std::vector<std::string> agent_value;
  std::vector<std::optional<std::string>> agent_ratio;
  std::string certified_c;
  std::optional<std::string> min_ratio;
};

namespace {

thread_local std::string last_error;
thread_local std::string decimal_buffer;

int status_of(mmsc::ErrorCode code) {
  switch (code) {
    case mmsc::ErrorCode::kParse: return MMSC_ERR_PARSE;
    case mmsc::ErrorCode::kUsage: return MMSC_ERR_USAGE;
    case mmsc::ErrorCode::kPrecondition: return MMSC_ERR_PRECONDITION;
    case mmsc::ErrorCode::kUnsupportedShape: return MMSC_ERR_UNSUPPORTED_SHAPE;
    case mmsc::ErrorCode::kMalformedBundle: return MMSC_ERR_MALFORMED_BUNDLE;
    case mmsc::ErrorCode::kOverBudget: return MMSC_ERR_OVER_BUDGET;
    case mmsc::ErrorCode::kInternal: return MMSC_ERR_INTERNAL;
  }
  return MMSC_ERR_INTERNAL;
}

template <typename F>
int guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const mmsc::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MMSC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MMSC_ERR_INTERNAL;
  }
}

int argument_error(const char* what) {
  last_error = what;
  return MMSC_ERR_ARGUMENT;
}

mmsc_result* new_result(const mmsc::Instance& inst) {
  auto* res = new mmsc_result;
  res->shape = inst.graph.shape();
  res->m = inst.m();
  return res;
}

void fill_report(mmsc_result* res, const mmsc::GuaranteeReport& report) {
  res->has_report = true;
  for (const mmsc::AgentReport& a : report.agents) {
    res->agent_mms.push_back(mmsc::to_string(a.mms));
    res->agent_value.push_back(mmsc::to_string(a.value));
    if (a.ratio) {
      res->agent_ratio.push_back(mmsc::to_string(*a.ratio));
    } else {
      res->agent_ratio.push_back(std::nullopt);
    }
  }
  res->certified_c = mmsc::to_string(report.certified_c);
  if (report.min_ratio) res->min_ratio = mmsc::to_string(*report.min_ratio);
}

int set_instance(mmsc::Instance inst, mmsc_instance** out) {
  *out = new mmsc_instance{std::move(inst), {}};
  return MMSC_OK;
}

const char* opt_c_str(const std::optional<std::string>& s) {
  return s ? s->c_str() : nullptr;
}

bool bundle_in_range(const mmsc_result* res, int bundle) {
  return res && bundle >= 0 &&
         bundle < static_cast<int>(res->bundles.size());
}

bool agent_in_range(const mmsc_result* res, int agent) {
  return res && res->has_report && agent >= 0 &&
         agent < static_cast<int>(res->agent_mms.size());
}

}  // namespace

extern "C" {

const char* mmsc_last_error(void) { return last_error.c_str(); }

const char* mmsc_status_name(int status) {
  switch (status) {
    case MMSC_OK: return "ok";
    case MMSC_NONE: return "none";
    case MMSC_ERR_PARSE: return "parse";
    case MMSC_ERR_USAGE: return "usage";
    case MMSC_ERR_PRECONDITION: return "precondition";
    case MMSC_ERR_UNSUPPORTED_SHAPE: return "unsupported-shape";
    case MMSC_ERR_MALFORMED_BUNDLE: return "malformed-bundle";
    case MMSC_ERR_OVER_BUDGET: return "over-budget";
    case MMSC_ERR_INTERNAL: return "internal";
    case MMSC_ERR_ARGUMENT: return "argument";
  }
  return "unknown";
}

int mmsc_instance_parse(const char* text, mmsc_instance** out) {
  if (!text || !out) return argument_error("null argument");
  return guarded([&] { return set_instance(mmsc::parse_instance(text), out); });
}

int mmsc_instance_load(const char* path, mmsc_instance** out) {
  if (!path || !out) return argument_error("null argument");
  return guarded([&] { return set_instance(mmsc::load_instance(path), out); });
}

int mmsc_instance_generate(int m, int n, int types, uint64_t seed,
                           int max_value, mmsc_instance** out) {
  if (!out) return argument_error("null argument");
  return guarded([&] {
    mmsc::GenerateOptions opt;
    opt.m = m;
    opt.n = n;
    opt.types = types;
    opt.seed = seed;
    opt.max_value = max_value;
    return set_instance(mmsc::generate_instance(opt), out);
  });
}

void mmsc_instance_free(mmsc_instance* inst) { delete inst; }

const char* mmsc_instance_text(mmsc_instance* inst) {
  if (!inst) return nullptr;
  inst->text = mmsc::serialize_instance(inst->inst);
  return inst->text.c_str();
}

int mmsc_instance_goods(const mmsc_instance* inst) {
  return inst ? inst->inst.m() : -1;
}

int mmsc_instance_agents(const mmsc_instance* inst) {
  return inst ? inst->inst.n() : -1;
}

const char* mmsc_instance_shape(const mmsc_instance* inst) {
  return inst ? mmsc::shape_name(inst->inst.graph.shape()) : nullptr;
}

int mmsc_instance_distinct_types(const mmsc_instance* inst) {
  return inst ? mmsc::distinct_types(inst->inst) : -1;
}

int mmsc_method_count(void) {
  return static_cast<int>(mmsc::method_names().size());
}

const char* mmsc_method_name(int index) {
  const std::vector<std::string>& names = mmsc::method_names();
  if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
  return names[index].c_str();
}

int mmsc_method_applicable(const mmsc_instance* inst, const char* method) {
  if (!inst || !method) return argument_error("null argument");
  return guarded([&] {
    std::string name = method;
    std::optional<mmsc::MethodBlocker> blocker =
        mmsc::method_blocker(inst->inst, name);
    if (!blocker) return static_cast<int>(MMSC_OK);
    last_error = blocker->message;
    return status_of(blocker->code);
  });
}

int mmsc_mms(const mmsc_instance* inst, int agent, int n, int use_oracle,
             mmsc_result** out) {
  if (!inst || !out) return argument_error("null argument");
  const mmsc::Instance& in = inst->inst;
  if (agent < 0 || agent >= in.n()) return argument_error("agent out of range");
  return guarded([&] {
    int k = n > 0 ? n : in.n();
    mmsc::Rational value;
    mmsc::Split split;
    if (use_oracle) {
      mmsc::OracleMms r = mmsc::oracle_mms(in.graph, in.agents[agent], k);
      value = r.value;
      split = std::move(r.split);
    } else {
      mmsc::MmsResult r = mmsc::mms(in.graph, in.agents[agent], k);
      value = r.value;
      split = std::move(r.split);
    }
    mmsc_result* res = new_result(in);
    res->value = mmsc::to_string(value);
    res->method = use_oracle ? "oracle" : "exact";
    res->bundles = std::move(split);
    *out = res;
    return static_cast<int>(MMSC_OK);
  });
}

int mmsc_allocate(const mmsc_instance* inst, const char* method,
                  mmsc_result** out) {
  if (!inst || !method || !out) return argument_error("null argument");
  return guarded([&] {
    mmsc::MethodOutcome outcome = mmsc::run_method(inst->inst, method);
    mmsc_result* res = new_result(inst->inst);
    res->method = outcome.method;
    if (outcome.allocation) {
      res->provenance = outcome.allocation->provenance;
      res->bundles = outcome.allocation->bundles;
    }
    if (outcome.report) fill_report(res, *outcome.report);
    *out = res;
    return static_cast<int>(outcome.allocation ? MMSC_OK : MMSC_NONE);
  });
}

int mmsc_oracle_exists(const mmsc_instance* inst, mmsc_result** out) {
  if (!inst || !out) return argument_error("null argument");
  return guarded([&] {
    std::optional<mmsc::Allocation> alloc = mmsc::oracle_exists(inst->inst);
    mmsc_result* res = new_result(inst->inst);
    res->method = "oracle";
    if (alloc) {
      res->provenance = alloc->provenance;
      res->bundles = alloc->bundles;
      fill_report(res, mmsc::build_report(inst->inst, *alloc,
                                          mmsc::agent_mms(inst->inst),
                                          mmsc::Rational(1)));
    }
    *out = res;
    return static_cast<int>(alloc ? MMSC_OK : MMSC_NONE);
  });
}

int mmsc_oracle_max_c(const mmsc_instance* inst, mmsc_result** out) {
  if (!inst || !out) return argument_error("null argument");
  return guarded([&] {
    mmsc::OracleMaxC r = mmsc::oracle_max_c(inst->inst);
    mmsc_result* res = new_result(inst->inst);
    res->method = "oracle";
    res->unbounded = r.unbounded;
    if (!r.unbounded) res->value = mmsc::to_string(r.value);
    res->provenance = r.witness.provenance;
    res->bundles = r.witness.bundles;
    *out = res;
    return static_cast<int>(MMSC_OK);
  });
}

void mmsc_result_free(mmsc_result* res) { delete res; }

const char* mmsc_result_value(const mmsc_result* res) {
  return res ? opt_c_str(res->value) : nullptr;
}

int mmsc_result_unbounded(const mmsc_result* res) {
  return res && res->unbounded ? 1 : 0;
}

const char* mmsc_result_method(const mmsc_result* res) {
  return res ? res->method.c_str() : nullptr;
}

const char* mmsc_result_provenance(const mmsc_result* res) {
  return res ? res->provenance.c_str() : nullptr;
}

int mmsc_result_bundle_count(const mmsc_result* res) {
  return res ? static_cast<int>(res->bundles.size()) : -1;
}

int mmsc_result_bundle_size(const mmsc_result* res, int bundle) {
  if (!bundle_in_range(res, bundle)) return -1;
  return static_cast<int>(res->bundles[bundle].size());
}

int mmsc_result_bundle_good(const mmsc_result* res, int bundle,
                            int position) {
  if (!bundle_in_range(res, bundle)) return -1;
  const mmsc::Bundle& b = res->bundles[bundle];
  if (position < 0 || position >= static_cast<int>(b.size())) return -1;
  return b[position];
}

int mmsc_result_bundle_arc(const mmsc_result* res, int bundle, int* start,
                           int* length) {
  if (!bundle_in_range(res, bundle) || !start || !length) return 0;
  if (res->shape != mmsc::Shape::kCycle && res->shape != mmsc::Shape::kPath) {
    return 0;
  }
  std::optional<mmsc::Arc> arc =
      mmsc::bundle_as_arc(res->m, res->bundles[bundle]);
  if (!arc) return 0;
  *start = arc->start;
  *length = arc->length;
  return 1;
}

int mmsc_result_has_report(const mmsc_result* res) {
  return res && res->has_report ? 1 : 0;
}

const char* mmsc_result_agent_mms(const mmsc_result* res, int agent) {
  return agent_in_range(res, agent) ? res->agent_mms[agent].c_str() : nullptr;
}

const char* mmsc_result_agent_value(const mmsc_result* res, int agent) {
  return agent_in_range(res, agent) ? res->agent_value[agent].c_str()
                                    : nullptr;
}

const char* mmsc_result_agent_ratio(const mmsc_result* res, int agent) {
  return agent_in_range(res, agent) ? opt_c_str(res->agent_ratio[agent])
                                    : nullptr;
}

const char* mmsc_result_certified_c(const mmsc_result* res) {
  return res && res->has_report ? res->certified_c.c_str() : nullptr;
}

const char* mmsc_result_min_ratio(const mmsc_result* res) {
  return res && res->has_report ? opt_c_str(res->min_ratio) : nullptr;
}

const char* mmsc_decimal(const char* rational, int digits) {
  if (!rational || digits < 0) {
    argument_error("bad decimal request");
    return nullptr;
  }
  int status = guarded([&] {
    decimal_buffer =
        mmsc::to_decimal(mmsc::parse_rational(rational), digits);
    return static_cast<int>(MMSC_OK);
  });
  return status == MMSC_OK ? decimal_buffer.c_str() : nullptr;
}

}  // extern "C"
