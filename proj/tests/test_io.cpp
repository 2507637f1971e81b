#include <set>

#include "doctest.h"
#include "mmsc/error.hpp"
#include "mmsc/instance_io.hpp"
#include "mmsc/rational.hpp"
#include "support.hpp"

using namespace mmsc;
using namespace mmsc::testing;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

std::string message_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("rationals parse to canonical form") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_decimal(Rational(5, 6), 4) == "0.8333");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK(make_rational(4, 6) == Rational(2, 3));
  CHECK(denominator_lcm({Rational(1, 4), Rational(5, 6)}) == 12);
}

TEST_CASE("fixtures parse") {
  Instance general = fixture("general_graph.mmsc");
  CHECK(general.graph.shape() == Shape::kGeneral);
  CHECK(general.m() == 8);
  CHECK(general.graph.edges().size() == 10);
  Instance trio = fixture("three_agents.mmsc");
  CHECK(trio.graph.shape() == Shape::kCycle);
  REQUIRE(trio.types.has_value());
  CHECK(*trio.types == std::vector<int>{0, 1, 2});
}

TEST_CASE("parser round trip") {
  for (const char* f : {"general_graph.mmsc", "three_agents.mmsc", "double_n4.mmsc", "two_types.mmsc",
                        "three_types.mmsc"}) {
    Instance a = fixture(f);
    std::string text = serialize_instance(a);
    Instance b = parse_instance(text);
    CHECK(serialize_instance(b) == text);
    CHECK(b.agents == a.agents);
    CHECK(b.types == a.types);
  }
  Instance q = parse_instance("mmsc 1\ngraph path 3\nagents 1\nu 1/2 2/4 3\n");
  CHECK(q.agents[0][1] == Rational(1, 2));
  CHECK(serialize_instance(parse_instance(serialize_instance(q))) ==
        serialize_instance(q));
}

TEST_CASE("parse errors carry the line number") {
  CHECK(code_of("mmsc 2\n") == ErrorCode::kParse);
  CHECK(message_of("mmsc 1\ngraph cycle 3\nagents 1\nu 1 2\n").find("line 4") !=
        std::string::npos);
  CHECK(message_of("mmsc 1\n\ngraph blob 3\n").find("line 3") !=
        std::string::npos);
  CHECK(code_of("mmsc 1\ngraph cycle 3\nagents 2\nu 1 1 1\nu 1 1 x\n") ==
        ErrorCode::kParse);
  CHECK(code_of("mmsc 1\ngraph cycle 3\nagents 1\nu 1 -1 1\n") !=
        ErrorCode::kInternal);
  // Agents sharing a type id must share rows.
  CHECK(code_of("mmsc 1\ngraph cycle 2\nagents 2\nu 1 1\nu 1 2\ntypes 0 0\n") !=
        ErrorCode::kInternal);
}

TEST_CASE("generator is deterministic and typed") {
  GenerateOptions opt;
  opt.m = 9;
  opt.n = 3;
  opt.seed = 7;
  std::string a = serialize_instance(generate_instance(opt));
  CHECK(a == serialize_instance(generate_instance(opt)));
  CHECK(serialize_instance(parse_instance(a)) == a);
  opt.seed = 8;
  CHECK(a != serialize_instance(generate_instance(opt)));

  opt.n = 6;
  opt.types = 3;
  Instance typed = generate_instance(opt);
  std::set<Utility> rows(typed.agents.begin(), typed.agents.end());
  CHECK(rows.size() == 3);
  for (const Utility& u : typed.agents) {
    for (const Rational& v : u) CHECK((v >= 0 && v <= opt.max_value));
  }
}
