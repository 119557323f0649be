#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "helpers.hpp"
#include "paretocheck/io.hpp"

using paretocheck::Json;
using paretocheck::SetDocument;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

/// Runs the installed binary with stderr folded into stdout.
CliResult run_cli(const std::string& args) {
  const std::string command = std::string(CLI_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[512];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string quoted_fixture(const std::string& name) {
  return "\"" + testutil::fixture_path(name) + "\"";
}

Json parse_report(const CliResult& result) {
  const Json body = Json::parse(result.output, nullptr, false);
  REQUIRE(!body.is_discarded());
  return body;
}

}  // namespace

TEST_CASE("check-axiom reports violations with a verified witness") {
  const CliResult result =
      run_cli("check-axiom pareto-star " + quoted_fixture("P2.json"));
  CHECK(result.exit_code == 1);
  const Json body = parse_report(result);
  CHECK(body["operation"] == "check-axiom");
  CHECK(body["axiom"] == "pareto-star");
  CHECK(body["verdict"] == "violated");
  CHECK(body["witness"]["l"] == Json::parse(R"(["1/3","1/3","1/3"])"));
  CHECK(body["witness"]["l_prime"] == Json::parse(R"(["1/3","2/3",0])"));
  CHECK(body["witness"]["verified"] == true);
  CHECK(body["witness"]["social_relation"] == "indifferent");
  CHECK(body.contains("command"));
  CHECK(body["elapsed_ms"].is_number());
}

TEST_CASE("check-axiom exits 0 on a profile that satisfies the axiom") {
  const CliResult result =
      run_cli("check-axiom pareto " + quoted_fixture("P1.json"));
  CHECK(result.exit_code == 0);
  const Json body = parse_report(result);
  CHECK(body["verdict"] == "holds");
  CHECK(!body.contains("witness"));
  CHECK(body["hypotheses"]["no_conflict_pair"] ==
        Json::array({"a", "c"}));
}

TEST_CASE("check-condition emits exact certificates") {
  const CliResult result =
      run_cli("check-condition theorem1 " + quoted_fixture("P1.json"));
  CHECK(result.exit_code == 0);
  const Json body = parse_report(result);
  CHECK(body["condition"] == "theorem1");
  CHECK(body["verdict"] == "holds");
  REQUIRE(body["certificates"].size() == 1);
  const Json& certificate = body["certificates"][0];
  CHECK(certificate["combination"] == Json::array({0, 0}));
  CHECK(certificate["agent_weights"] == Json::array({1, 1}));
  CHECK(certificate["social_weights"] == Json::array({1}));
}

TEST_CASE("check-condition reports counterexamples and exits 1") {
  const CliResult result =
      run_cli("check-condition theorem1 " + quoted_fixture("P2.json"));
  CHECK(result.exit_code == 1);
  const Json body = parse_report(result);
  CHECK(body["verdict"] == "fails");
  CHECK(body["counterexample"]["combination"] == Json::array({0, 0}));
  CHECK(body["counterexample"]["farkas"].is_array());
}

TEST_CASE("equiv compares normalized relations") {
  const CliResult same = run_cli("equiv " + quoted_fixture("equiv_a.json") +
                                 " " + quoted_fixture("equiv_b.json"));
  CHECK(same.exit_code == 0);
  CHECK(parse_report(same)["equivalent"] == true);

  const CliResult different =
      run_cli("equiv " + quoted_fixture("equiv_a.json") + " " +
              quoted_fixture("equiv_c.json"));
  CHECK(different.exit_code == 1);
}

TEST_CASE("aggregate emits a set document the parser accepts") {
  const CliResult summed =
      run_cli("aggregate minkowski " + quoted_fixture("agents.json"));
  CHECK(summed.exit_code == 0);
  const SetDocument sum = paretocheck::parse_set_document(summed.output);
  CHECK(sum.set.vertices ==
        std::vector<paretocheck::UtilityVector>{testutil::rv({3, 3, 0})});

  const CliResult halves =
      run_cli("aggregate minkowski " + quoted_fixture("agents.json") +
              " --weights 1/2,1/2");
  const SetDocument half = paretocheck::parse_set_document(halves.output);
  CHECK(half.set.vertices == std::vector<paretocheck::UtilityVector>{
                                 testutil::rq({"3/2", "3/2", "0"})});

  const CliResult hull =
      run_cli("aggregate union-hull " + quoted_fixture("agents.json"));
  CHECK(hull.exit_code == 0);
  const SetDocument merged = paretocheck::parse_set_document(hull.output);
  CHECK(merged.set.vertices.size() == 2);
}

TEST_CASE("normalize canonicalizes and stays parseable") {
  const CliResult left = run_cli("normalize " + quoted_fixture("equiv_a.json"));
  const CliResult right =
      run_cli("normalize " + quoted_fixture("equiv_b.json"));
  CHECK(left.exit_code == 0);
  CHECK(right.exit_code == 0);
  // Equivalent inputs canonicalize to the same vertex list.
  CHECK(paretocheck::parse_set_document(left.output).set.vertices ==
        paretocheck::parse_set_document(right.output).set.vertices);
}

TEST_CASE("witness and oracle agree with the axiom checker") {
  const CliResult found =
      run_cli("witness pareto-star " + quoted_fixture("P5.json"));
  CHECK(found.exit_code == 1);
  const Json body = parse_report(found);
  CHECK(body["operation"] == "witness");
  CHECK(body["witness"]["l_prime"] == Json::parse(R"(["1/9","2/3","2/9"])"));

  const CliResult none =
      run_cli("witness pareto-star " + quoted_fixture("P1.json"));
  CHECK(none.exit_code == 0);

  const CliResult scan = run_cli("oracle pareto-star " +
                                 quoted_fixture("P2.json") +
                                 " --denominator 3");
  CHECK(scan.exit_code == 1);
  const Json oracle_body = parse_report(scan);
  CHECK(oracle_body["violation_count"].get<int>() > 0);
  CHECK(oracle_body["truncated"] == false);
  bool frozen_pair_listed = false;
  for (const Json& pair : oracle_body["pairs"]) {
    if (pair["l"] == Json::parse(R"(["1/3","1/3","1/3"])") &&
        pair["l_prime"] == Json::parse(R"(["1/3","2/3",0])")) {
      frozen_pair_listed = true;
    }
  }
  CHECK(frozen_pair_listed);
}

TEST_CASE("pretty mode prints the summary instead of JSON") {
  const CliResult result =
      run_cli("--pretty check-axiom pareto " + quoted_fixture("P1.json"));
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("pareto") != std::string::npos);
  CHECK(result.output.find("holds") != std::string::npos);
  CHECK(result.output.find('{') == std::string::npos);
}

TEST_CASE("input errors exit 2") {
  CHECK(run_cli("check-axiom nope " + quoted_fixture("P1.json")).exit_code ==
        2);
  CHECK(run_cli("check-axiom pareto " + quoted_fixture("missing.json"))
            .exit_code == 2);
  CHECK(run_cli("check-condition theorem1 " + quoted_fixture("P1.json") +
                " --strict")
            .exit_code == 2);
  CHECK(run_cli("check-condition nope " + quoted_fixture("P1.json"))
            .exit_code == 2);
  CHECK(run_cli("aggregate union-hull " + quoted_fixture("agents.json") +
                " --weights 1,1")
            .exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("check-axiom --help").exit_code == 0);
}
