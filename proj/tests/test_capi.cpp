// Exercises the shared library through its C header only.
#include <string>

#include "doctest.h"
#include "mmsc/mmsc.h"

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(MMSC_FIXTURE_DIR) + "/" + name;
}

mmsc_instance* load(const std::string& name) {
  mmsc_instance* inst = nullptr;
  REQUIRE(mmsc_instance_load(fixture_path(name).c_str(), &inst) == MMSC_OK);
  return inst;
}

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(mmsc_status_name(MMSC_OK)) == "ok");
  mmsc_instance* inst = nullptr;
  CHECK(mmsc_instance_parse("mmsc 1\ngraph cycle 3\nagents 1\nu 1 2\n", &inst) ==
        MMSC_ERR_PARSE);
  CHECK(inst == nullptr);
  CHECK(std::string(mmsc_last_error()).find("line 4") != std::string::npos);
  CHECK(mmsc_instance_parse(nullptr, &inst) == MMSC_ERR_ARGUMENT);
  CHECK(mmsc_instance_load("/nonexistent/file.mmsc", &inst) != MMSC_OK);
}

TEST_CASE("instance accessors") {
  mmsc_instance* inst = load("three_agents.mmsc");
  CHECK(mmsc_instance_goods(inst) == 9);
  CHECK(mmsc_instance_agents(inst) == 3);
  CHECK(std::string(mmsc_instance_shape(inst)) == "cycle");
  CHECK(mmsc_instance_distinct_types(inst) == 3);
  std::string text = mmsc_instance_text(inst);
  mmsc_instance* again = nullptr;
  REQUIRE(mmsc_instance_parse(text.c_str(), &again) == MMSC_OK);
  CHECK(text == mmsc_instance_text(again));
  mmsc_instance_free(again);
  mmsc_instance_free(inst);
}

TEST_CASE("generator is deterministic") {
  mmsc_instance* a = nullptr;
  mmsc_instance* b = nullptr;
  REQUIRE(mmsc_instance_generate(10, 3, 2, 7, 9, &a) == MMSC_OK);
  REQUIRE(mmsc_instance_generate(10, 3, 2, 7, 9, &b) == MMSC_OK);
  CHECK(std::string(mmsc_instance_text(a)) == mmsc_instance_text(b));
  CHECK(mmsc_instance_distinct_types(a) <= 2);
  mmsc_instance_free(a);
  mmsc_instance_free(b);
  CHECK(mmsc_instance_generate(0, 3, 0, 1, 9, &a) != MMSC_OK);
}

TEST_CASE("mms queries") {
  mmsc_instance* trio = load("three_agents.mmsc");
  const char* expected[] = {"5", "5", "6"};
  for (int i = 0; i < 3; ++i) {
    mmsc_result* res = nullptr;
    REQUIRE(mmsc_mms(trio, i, 0, 0, &res) == MMSC_OK);
    CHECK(std::string(mmsc_result_value(res)) == expected[i]);
    CHECK(mmsc_result_bundle_count(res) == 3);
    int start = 0;
    int length = 0;
    CHECK(mmsc_result_bundle_arc(res, 0, &start, &length) == 1);
    mmsc_result_free(res);
  }
  mmsc_result* res = nullptr;
  CHECK(mmsc_mms(trio, 3, 0, 0, &res) == MMSC_ERR_ARGUMENT);
  mmsc_instance_free(trio);

  mmsc_instance* general = load("general_graph.mmsc");
  CHECK(mmsc_mms(general, 0, 0, 0, &res) == MMSC_ERR_UNSUPPORTED_SHAPE);
  REQUIRE(mmsc_mms(general, 0, 0, 1, &res) == MMSC_OK);
  CHECK(std::string(mmsc_result_value(res)) == "5");
  mmsc_result_free(res);
  mmsc_instance_free(general);
}

TEST_CASE("methods and allocation") {
  CHECK(mmsc_method_count() == 12);
  CHECK(std::string(mmsc_method_name(0)) == "one-deviant");
  CHECK(mmsc_method_name(99) == nullptr);

  mmsc_instance* trio = load("three_agents.mmsc");
  CHECK(mmsc_method_applicable(trio, "five-sixths") == MMSC_OK);
  CHECK(mmsc_method_applicable(trio, "tree") == MMSC_ERR_UNSUPPORTED_SHAPE);
  CHECK(mmsc_method_applicable(trio, "two-types-34") == MMSC_ERR_PRECONDITION);
  CHECK(mmsc_method_applicable(trio, "bogus") == MMSC_ERR_USAGE);

  mmsc_result* res = nullptr;
  REQUIRE(mmsc_allocate(trio, "auto", &res) == MMSC_OK);
  CHECK(std::string(mmsc_result_method(res)) == "five-sixths");
  CHECK(std::string(mmsc_result_certified_c(res)) == "5/6");
  REQUIRE(mmsc_result_has_report(res) == 1);
  CHECK(mmsc_result_bundle_count(res) == 3);
  CHECK(std::string(mmsc_result_agent_mms(res, 2)) == "6");
  CHECK(mmsc_result_agent_ratio(res, 0) != nullptr);
  CHECK(std::string(mmsc_decimal(mmsc_result_certified_c(res), 3)) == "0.833");
  mmsc_result_free(res);

  res = nullptr;
  CHECK(mmsc_allocate(trio, "dp-types", &res) == MMSC_NONE);
  REQUIRE(res != nullptr);
  CHECK(mmsc_result_has_report(res) == 0);
  mmsc_result_free(res);
  mmsc_instance_free(trio);
}

TEST_CASE("oracle") {
  mmsc_instance* triple = load("three_types.mmsc");
  mmsc_result* res = nullptr;
  REQUIRE(mmsc_oracle_max_c(triple, &res) == MMSC_OK);
  CHECK(std::string(mmsc_result_value(res)) == "3/4");
  CHECK(mmsc_result_unbounded(res) == 0);
  mmsc_result_free(res);
  mmsc_instance_free(triple);

  mmsc_instance* general = load("general_graph.mmsc");
  REQUIRE(mmsc_oracle_exists(general, &res) == MMSC_OK);
  CHECK(mmsc_result_bundle_count(res) == 3);
  mmsc_result_free(res);
  mmsc_instance_free(general);

  mmsc_instance* duo = load("two_types.mmsc");
  CHECK(mmsc_oracle_exists(duo, &res) == MMSC_NONE);
  mmsc_result_free(res);
  mmsc_instance_free(duo);
}
