#include <doctest.h>

#include "rcb/json_io.hpp"

using namespace rcb;

TEST_CASE("surgery problem round trip") {
  const auto j = parse_json(R"({"base":{"orientable":true,"genus":0,"boundary":2},"tori":[[5,3],[1,0]],"klein":0})");
  const SurgeryProblem p = surgery_problem_from_json(j);
  CHECK(p.torus_gluings == std::vector<Slope>{{1, 3}, {1, 0}});
  const Json back = to_json(p);
  CHECK(surgery_problem_from_json(back).torus_gluings == p.torus_gluings);
  CHECK(to_json(decompose(p))["kind"] == "connected_sum");
  CHECK(to_json(decompose(p))["lens"] == Json::parse("[[3,1]]"));
}

TEST_CASE("seifert output carries the Euler number as a string") {
  const auto p = surgery_problem_from_json(
      parse_json(R"({"base":{"orientable":true,"genus":0,"boundary":1},"tori":[[1,3]],"klein":0})"));
  const Json m = to_json(decompose(p));
  CHECK(m["kind"] == "seifert");
  CHECK(m["euler"] == "1/3");
  CHECK(m["fibers"] == Json::parse("[[1,3]]"));
}

TEST_CASE("malformed documents are rejected with the field named") {
  CHECK_THROWS_AS(parse_json("{"), ValidationError);
  CHECK_THROWS_WITH_AS(surgery_problem_from_json(parse_json(R"({"tori":[]})")), "missing field 'base'", ValidationError);
  CHECK_THROWS_AS(surgery_problem_from_json(parse_json(R"({"base":{"orientable":1,"genus":0}})")), ValidationError);
  CHECK_THROWS_AS(surgery_problem_from_json(parse_json(
                      R"({"base":{"orientable":true,"genus":0,"boundary":1},"tori":[[1,2,3]]})")),
                  ValidationError);
  CHECK_THROWS_AS(fibration_from_json(parse_json(R"({"total_space_orientable":true,"components":[
      {"surface":{"orientable":true,"genus":0},"region":{"seifert_points":[{"m":4,"b":2}]}}]})")),
                  ValidationError);
}

TEST_CASE("fibration descriptors") {
  const auto f = fibration_from_json(parse_json(R"({
    "total_space_orientable": false,
    "components": [{
      "surface": {"orientable": false, "genus": 1},
      "rational_over_c": true,
      "points": [{"m": 2, "separating": false}],
      "region": {"collapsed_ends": 1, "blown_up_curves": 2,
                 "seifert_points": [{"m": 2, "b": 1, "sheets": 2}]},
      "rp3": 1
    }]})"));
  REQUIRE(f.components.size() == 1);
  CHECK(f.components[0].region.blown_up_curves == 2);
  CHECK(f.components[0].region.seifert_points[0].sheets == 2);
  CHECK(f.components[0].rp3_count == 1);
  const Json a = to_json(assemble(f));
  CHECK(a["components"][0].contains("note"));
}

TEST_CASE("json output is deterministic") {
  const auto p = surgery_problem_from_json(
      parse_json(R"({"klein":0,"tori":[[2,5],[1,3]],"base":{"genus":1,"boundary":2,"orientable":true}})"));
  CHECK(to_json(decompose(p)).dump() == to_json(decompose(p)).dump());
  CHECK(to_json(decompose(p)).dump().find("\"base\"") < to_json(decompose(p)).dump().find("\"kind\""));
}
