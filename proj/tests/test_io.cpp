#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "paretocheck/io.hpp"

using namespace paretocheck;
using testutil::rv;

namespace {

const char* kConstantVertex = R"({
  "outcomes": ["a", "b", "c"],
  "agents": [
    {"id": "alice", "vertices": [[1, 1, 1]]},
    {"id": "bob", "vertices": [[1, 2, 0]]}
  ],
  "social": {"vertices": [[1, 0, 0]]}
})";

const char* kZeroDenominator = R"({
  "outcomes": ["a", "b", "c"],
  "agents": [
    {"id": "alice", "vertices": [[2, 1, "1/0"]]},
    {"id": "bob", "vertices": [[1, 2, 0]]}
  ],
  "social": {"vertices": [[1, 0, 0]]}
})";

const char* kFloatCoordinate = R"({
  "outcomes": ["a", "b", "c"],
  "agents": [
    {"id": "alice", "vertices": [[2, 1, 0.5]]},
    {"id": "bob", "vertices": [[1, 2, 0]]}
  ],
  "social": {"vertices": [[1, 0, 0]]}
})";

}  // namespace

TEST_CASE("profile documents round-trip through emit and parse") {
  const std::string text = read_file(testutil::fixture_path("P1.json"));
  const ProfileDocument first = parse_profile_document(text);
  CHECK(first.profile.num_agents() == 2);
  CHECK(first.profile.individuals[0].vertices ==
        std::vector<UtilityVector>{rv({2, 1, 0})});
  CHECK(first.profile.individuals[1].vertices ==
        std::vector<UtilityVector>{rv({1, 2, 0})});
  CHECK(first.agent_ids == std::vector<std::string>{"alice", "bob"});

  const ProfileDocument second =
      parse_profile_document(emit_profile_document(first));
  CHECK(second.agent_ids == first.agent_ids);
  CHECK(second.profile.space.labels == first.profile.space.labels);
  for (std::size_t i = 0; i < first.profile.num_agents(); ++i) {
    CHECK(second.profile.individuals[i].vertices ==
          first.profile.individuals[i].vertices);
  }
  CHECK(second.profile.social.vertices == first.profile.social.vertices);
  // A second emit is byte-identical: parse . emit is a fixed point.
  CHECK(emit_profile_document(second) == emit_profile_document(first));
}

TEST_CASE("parse errors name the offending agent, vertex, and coordinate") {
  CHECK_THROWS_WITH_AS(parse_profile_document(kConstantVertex),
                       "alice: vertex 0 is constant", ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_profile_document(kZeroDenominator),
      "alice vertex 0 coordinate 2: bad rational '1/0': zero denominator",
      ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_profile_document(kFloatCoordinate),
      "alice vertex 0 coordinate 2: rationals must be integers or \"p/q\""
      " strings",
      ValidationError);
  CHECK_THROWS_AS(parse_profile_document("not json"), ValidationError);
  CHECK_THROWS_AS(parse_profile_document(R"({"outcomes": ["a", "b"]})"),
                  ValidationError);
}

TEST_CASE("rationals serialize exactly") {
  CHECK(rational_to_json(Rat(7)) == Json(7));
  CHECK(rational_to_json(Rat(-3)) == Json(-3));
  CHECK(rational_to_json(Rat(1, 2)) == Json("1/2"));
  CHECK(rational_to_json(parse_rational("36893488147419103232")) ==
        Json("36893488147419103232"));

  const Json mixed = Json::array({1, "1/2", "-3/2"});
  const RatVec parsed = vector_from_json(mixed, "probe");
  CHECK(parsed == testutil::rq({"1", "1/2", "-3/2"}));
  CHECK_THROWS_AS(vector_from_json(Json::array({0.25}), "probe"),
                  ValidationError);
}

TEST_CASE("set and agents documents parse and emit") {
  const SetDocument set = testutil::load_set("equiv_a.json");
  CHECK(set.space.labels == std::vector<std::string>{"a", "b", "c"});
  CHECK(set.set.vertices ==
        std::vector<UtilityVector>{rv({1, 0, 0}), rv({0, 1, 0})});
  const SetDocument round = parse_set_document(emit_set_document(set));
  CHECK(round.set.vertices == set.set.vertices);

  const AgentsDocument agents = testutil::load_agents("agents.json");
  CHECK(agents.agents.size() == 2);
  CHECK(agents.agent_ids == std::vector<std::string>{"alice", "bob"});

  CHECK_THROWS_AS(read_file(testutil::fixture_path("missing.json")),
                  ValidationError);
}
