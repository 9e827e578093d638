#include "helpers.hpp"
#include "invseq/serialize.hpp"

using namespace invseq;
using testing::seq;

TEST_CASE("profile json") {
  const Json j = to_json(profile(seq("0,0,0,0,3,3,0,3,3,3,4,6")));
  CHECK(j["n"] == 12);
  CHECK(j["pk"] == Json::array({5, 8}));
  CHECK(j["tl"] == Json::array({11, 12}));
  const Json outside = to_json(profile(seq("0,1,0,0")));
  CHECK(outside["fix"].is_null());
  CHECK(outside["tr"].is_null());
}

TEST_CASE("trace json") {
  const auto [g, trace] = Gamma(seq("0,0"), true);
  const Json j = to_json(trace);
  REQUIRE(j["steps"].size() == 1);
  const Json& s = j["steps"][0];
  CHECK(s["mover"] == 1);
  CHECK(s["direction"] == "right");
  CHECK(s["from"] == 1);
  CHECK(s["to"] == 2);
  CHECK(s["valueBefore"] == 0);
  CHECK(s["valueAfter"] == 1);
  CHECK(j["states"] == Json::array({Json::array({0, 0}), Json::array({0, 1})}));
  CHECK_FALSE(to_json(Gamma(seq("0,0")).second).contains("states"));
}

TEST_CASE("polynomials and big integers") {
  CHECK(to_json(IntPoly(std::vector<Integer>{1, 4, 1})) == Json::array({1, 4, 1}));
  Integer big = 1;
  for (int i = 0; i < 100; ++i) big *= 2;
  CHECK(to_json(big) == big.str());
}

TEST_CASE("distributions") {
  const SetDist d{{{1}, 3}, {{}, 1}};
  const Json j = to_json(d);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["key"] == Json::array());
  CHECK(j[0]["count"] == 1);
  const JointDist jd{{{1, {1}}, 2}};
  CHECK(to_json(jd)[0]["key"]["dt"] == Json::array({1}));
}

TEST_CASE("check results and errors") {
  CheckResult r;
  r.name = "x";
  r.n_max = 3;
  r.passed = false;
  r.counterexample = Counterexample{2, "(0,0)", "a", "b"};
  const Json j = to_json(r);
  CHECK(j["status"] == "fail");
  CHECK(j["counterexample"]["input"] == "(0,0)");
  CHECK_FALSE(j.contains("elapsedSeconds"));
  CHECK(to_json(r, true).contains("elapsedSeconds"));

  const Json e = error_json(ResourceLimitError(14, 12));
  CHECK(e["error"] == "ResourceLimit");
  CHECK(e["limit"] == 12);
  const Json p = error_json(ParseError(3, "~", "bad"));
  CHECK(p["error"] == "ParseError");
  CHECK(p["token"] == "~");
}
