#include "doctest.h"
#include "mmsc/csuff.hpp"
#include "mmsc/error.hpp"
#include "mmsc/methods.hpp"
#include "support.hpp"

using namespace mmsc;
using namespace mmsc::testing;

namespace {

ErrorCode code_of(const Instance& inst, const std::string& name) {
  try {
    run_method(inst, name);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("method list") {
  CHECK(method_names().size() == 12);
  CHECK(is_exact_method("tree"));
  CHECK_FALSE(is_exact_method("psi"));
  CHECK(advertised_c(fixture("three_agents.mmsc"), "five-sixths") == Rational(5, 6));
  CHECK(advertised_c(fixture("three_agents.mmsc"), "psi") == Rational(3, 4));
  CHECK(advertised_c(fixture("three_agents.mmsc"), "m-eq-2n") == 1);
}

TEST_CASE("blockers") {
  Instance trio = fixture("three_agents.mmsc");
  CHECK_FALSE(method_blocker(trio, "five-sixths").has_value());
  CHECK_FALSE(method_blocker(trio, "three-types-34").has_value());
  CHECK(method_blocker(trio, "two-types-34")->code == ErrorCode::kPrecondition);
  CHECK(method_blocker(trio, "tree")->code == ErrorCode::kUnsupportedShape);
  CHECK(method_blocker(trio, "m-lt-2n")->code == ErrorCode::kPrecondition);
  CHECK_THROWS_AS(method_blocker(trio, "bogus"), Error);

  Instance general = fixture("general_graph.mmsc");
  CHECK(method_blocker(general, "half")->code == ErrorCode::kUnsupportedShape);
  CHECK(code_of(general, "auto") == ErrorCode::kUnsupportedShape);
  CHECK(code_of(trio, "bogus") == ErrorCode::kUsage);
  CHECK(code_of(trio, "tree") == ErrorCode::kUnsupportedShape);
  CHECK_FALSE(run_method(trio, "dp-types").allocation.has_value());
  Instance untyped = trio;
  untyped.types.reset();
  CHECK(code_of(untyped, "dp-types") == ErrorCode::kPrecondition);
}

TEST_CASE("dispatcher picks the best guarantee") {
  MethodOutcome trio = run_method(fixture("three_agents.mmsc"), "auto");
  CHECK(trio.method == "five-sixths");
  REQUIRE(trio.report.has_value());
  CHECK(trio.report->certified_c == Rational(5, 6));
  CHECK(*trio.report->min_ratio >= Rational(5, 6));

  Rng rng(61);
  for (int k = 0; k < 20; ++k) {
    MethodOutcome two = run_method(random_cycle(rng, pick(rng, 2, 12), 2, 0, 9), "auto");
    REQUIRE(two.report.has_value());
    CHECK(two.report->certified_c == 1);
    if (two.report->min_ratio) CHECK(*two.report->min_ratio >= 1);
  }

  Instance seven = random_cycle(rng, 20, 7, 0, 9);
  MethodOutcome psi = run_method(seven, "auto");
  CHECK(psi.method == "psi");
  CHECK(psi.report->certified_c == Rational(7, 10));
  CHECK(at_least_psi(psi.report->certified_c));
  if (psi.report->min_ratio) CHECK(*psi.report->min_ratio >= Rational(7, 10));

  Instance tree = random_instance(rng, random_tree(rng, 9), 4, 0, 9);
  CHECK(run_method(tree, "auto").method == "tree");
}

TEST_CASE("exact methods may report none") {
  Instance double4 = fixture("double_n4.mmsc");
  MethodOutcome out = run_method(double4, "m-eq-2n");
  CHECK_FALSE(out.allocation.has_value());
  CHECK_FALSE(out.report.has_value());
  MethodOutcome fallback = run_method(double4, "auto");
  REQUIRE(fallback.allocation.has_value());
  CHECK(fallback.report->certified_c < 1);
}

TEST_CASE("auto never certifies less than half on cycles") {
  Rng rng(62);
  for (int k = 0; k < 200; ++k) {
    int n = pick(rng, 1, 6);
    Instance inst = random_cycle(rng, pick(rng, 1, 14), n, pick(rng, 0, n), 9,
                                 pick(rng, 0, 3));
    MethodOutcome out = run_method(inst, "auto");
    REQUIRE(out.allocation.has_value());
    CHECK(out.report->certified_c >= Rational(1, 2));
    if (out.report->min_ratio) CHECK(*out.report->min_ratio >= out.report->certified_c);
  }
}
