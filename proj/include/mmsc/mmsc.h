/* C interface to the mmsc library. All rationals cross the boundary as
 * canonical "p/q" strings (or plain integers). Functions return a status
 * code; on failure mmsc_last_error() describes the problem for the calling
 * thread. Strings returned by accessors are owned by the handle they came
 * from. */
#ifndef MMSC_MMSC_H_
#define MMSC_MMSC_H_

#include <stdint.h>

#if defined(MMSC_BUILDING_LIBRARY)
#define MMSC_API __attribute__((visibility("default")))
#else
#define MMSC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum mmsc_status {
  MMSC_OK = 0,
  /* The question has a negative answer (no allocation, NO). */
  MMSC_NONE = 1,
  MMSC_ERR_PARSE = 2,
  MMSC_ERR_USAGE = 3,
  MMSC_ERR_PRECONDITION = 4,
  MMSC_ERR_UNSUPPORTED_SHAPE = 5,
  MMSC_ERR_MALFORMED_BUNDLE = 6,
  MMSC_ERR_OVER_BUDGET = 7,
  MMSC_ERR_INTERNAL = 8,
  MMSC_ERR_ARGUMENT = 9
};

typedef struct mmsc_instance mmsc_instance;
typedef struct mmsc_result mmsc_result;

MMSC_API const char* mmsc_last_error(void);
MMSC_API const char* mmsc_status_name(int status);

/* Instances. */
MMSC_API int mmsc_instance_parse(const char* text, mmsc_instance** out);
MMSC_API int mmsc_instance_load(const char* path, mmsc_instance** out);
/* types = 0 gives every agent its own row. */
MMSC_API int mmsc_instance_generate(int m, int n, int types, uint64_t seed,
                                    int max_value, mmsc_instance** out);
MMSC_API void mmsc_instance_free(mmsc_instance* inst);
/* Canonical file text, owned by the instance until the next call. */
MMSC_API const char* mmsc_instance_text(mmsc_instance* inst);
MMSC_API int mmsc_instance_goods(const mmsc_instance* inst);
MMSC_API int mmsc_instance_agents(const mmsc_instance* inst);
MMSC_API const char* mmsc_instance_shape(const mmsc_instance* inst);
MMSC_API int mmsc_instance_distinct_types(const mmsc_instance* inst);

/* Methods. Names are listed exact-first; "auto" is accepted by
 * mmsc_allocate but not listed. */
MMSC_API int mmsc_method_count(void);
MMSC_API const char* mmsc_method_name(int index);
/* MMSC_OK when applicable; otherwise the status the method would fail with
 * and mmsc_last_error() names the violated precondition. */
MMSC_API int mmsc_method_applicable(const mmsc_instance* inst,
                                    const char* method);

/* Queries. Each fills *out with a new result on MMSC_OK and MMSC_NONE. */
/* mms of one agent (0-based) for n bundles; n <= 0 means the agent count.
 * use_oracle selects brute force, required for general graphs. */
MMSC_API int mmsc_mms(const mmsc_instance* inst, int agent, int n,
                      int use_oracle, mmsc_result** out);
/* MMSC_NONE when an exact method decides no mms-allocation exists. */
MMSC_API int mmsc_allocate(const mmsc_instance* inst, const char* method,
                           mmsc_result** out);
/* MMSC_OK with a witness allocation, or MMSC_NONE. */
MMSC_API int mmsc_oracle_exists(const mmsc_instance* inst, mmsc_result** out);
/* Largest c with a c-sufficient allocation, plus a witness. */
MMSC_API int mmsc_oracle_max_c(const mmsc_instance* inst, mmsc_result** out);
MMSC_API void mmsc_result_free(mmsc_result* res);

/* Results. Value is the mms or the max c; NULL when not applicable. */
MMSC_API const char* mmsc_result_value(const mmsc_result* res);
/* Max-c only: every agent has mms zero. */
MMSC_API int mmsc_result_unbounded(const mmsc_result* res);
MMSC_API const char* mmsc_result_method(const mmsc_result* res);
MMSC_API const char* mmsc_result_provenance(const mmsc_result* res);
/* Bundles of the split or allocation, indexed by agent for allocations. */
MMSC_API int mmsc_result_bundle_count(const mmsc_result* res);
MMSC_API int mmsc_result_bundle_size(const mmsc_result* res, int bundle);
MMSC_API int mmsc_result_bundle_good(const mmsc_result* res, int bundle,
                                     int position);
/* 1 and the arc when the bundle is contiguous on the cycle/path order. */
MMSC_API int mmsc_result_bundle_arc(const mmsc_result* res, int bundle,
                                    int* start, int* length);
/* Report; 0 when the result carries none. */
MMSC_API int mmsc_result_has_report(const mmsc_result* res);
MMSC_API const char* mmsc_result_agent_mms(const mmsc_result* res, int agent);
MMSC_API const char* mmsc_result_agent_value(const mmsc_result* res,
                                             int agent);
/* NULL when the agent has mms zero. */
MMSC_API const char* mmsc_result_agent_ratio(const mmsc_result* res,
                                             int agent);
MMSC_API const char* mmsc_result_certified_c(const mmsc_result* res);
/* NULL when every agent has mms zero. */
MMSC_API const char* mmsc_result_min_ratio(const mmsc_result* res);

/* Decimal rendering of a rational string, digits after the point; the
 * string lives until the next call on this thread. */
MMSC_API const char* mmsc_decimal(const char* rational, int digits);

#ifdef __cplusplus
}
#endif

#endif /* MMSC_MMSC_H_ */
