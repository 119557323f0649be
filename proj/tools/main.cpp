#include <chrono>
#include <cstddef>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "paretocheck/reports.hpp"

namespace {

using namespace paretocheck;

std::string join_command(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i != 0) {
      out += ' ';
    }
    out += argv[i];
  }
  return out;
}

Axiom parse_axiom_arg(const std::string& name) {
  if (auto axiom = axiom_from_name(name)) {
    return *axiom;
  }
  throw std::invalid_argument(
      "unknown axiom: " + name +
      " (expected pareto, pareto-star, pareto-indifference,"
      " pareto-incomparability, or non-reversal)");
}

RatVec parse_weights_arg(const std::string& text) {
  RatVec weights;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string piece = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    weights.push_back(parse_rational(piece));
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return weights;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "paretocheck: exact checkers for Pareto axioms and utilitarian"
      " representations of incomplete preferences over lotteries"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty,
               "print a human-readable summary instead of the JSON report");

  std::string axiom_arg;
  std::string condition_arg;
  std::string rule_arg;
  std::string profile_path;
  std::string left_path;
  std::string right_path;
  std::string weights_arg;
  std::size_t denominator = 5;
  bool strict = false;

  CLI::App* check_axiom_cmd = app.add_subcommand(
      "check-axiom", "decide an axiom exactly; exit 1 with a witness pair on"
                     " violation");
  check_axiom_cmd->add_option("axiom", axiom_arg, "axiom name")->required();
  check_axiom_cmd->add_option("profile", profile_path, "profile file")
      ->required();

  CLI::App* check_condition_cmd = app.add_subcommand(
      "check-condition",
      "decide a representation condition (theorem1, pareto, prop1, prop2)");
  check_condition_cmd
      ->add_option("condition", condition_arg,
                   "theorem1 | pareto | prop1 | prop2")
      ->required();
  check_condition_cmd->add_option("profile", profile_path, "profile file")
      ->required();
  check_condition_cmd->add_flag(
      "--strict", strict, "open-cone semantics (prop1 only)");

  CLI::App* aggregate_cmd = app.add_subcommand(
      "aggregate", "build a social set (minkowski | union-hull) from an"
                   " agents file; emits a set document");
  aggregate_cmd->add_option("rule", rule_arg, "minkowski | union-hull")
      ->required();
  aggregate_cmd->add_option("agents", left_path, "agents file")->required();
  aggregate_cmd->add_option("--weights", weights_arg,
                            "comma-separated positive rationals, one per"
                            " agent (minkowski only; default all 1)");

  CLI::App* witness_cmd = app.add_subcommand(
      "witness", "search for a violating lottery pair; exit 1 when found");
  witness_cmd->add_option("axiom", axiom_arg, "axiom name")->required();
  witness_cmd->add_option("profile", profile_path, "profile file")->required();

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "extensional grid scan of every ordered lottery pair");
  oracle_cmd->add_option("axiom", axiom_arg, "axiom name")->required();
  oracle_cmd->add_option("profile", profile_path, "profile file")->required();
  oracle_cmd->add_option("--denominator", denominator,
                         "grid denominator D >= 1 (default 5)");

  CLI::App* equiv_cmd = app.add_subcommand(
      "equiv", "decide whether two sets induce the same relation");
  equiv_cmd->add_option("left", left_path, "set file")->required();
  equiv_cmd->add_option("right", right_path, "set file")->required();

  CLI::App* normalize_cmd = app.add_subcommand(
      "normalize", "canonicalize every vertex (mean zero, range one); emits"
                   " a set document");
  normalize_cmd->add_option("set", left_path, "set file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  OperationReport report;
  try {
    if (app.got_subcommand(check_axiom_cmd)) {
      const ProfileDocument doc =
          parse_profile_document(read_file(profile_path));
      report = run_check_axiom(doc, parse_axiom_arg(axiom_arg));
    } else if (app.got_subcommand(check_condition_cmd)) {
      const ProfileDocument doc =
          parse_profile_document(read_file(profile_path));
      report = run_check_condition(doc, condition_arg, strict);
    } else if (app.got_subcommand(aggregate_cmd)) {
      const AgentsDocument doc = parse_agents_document(read_file(left_path));
      std::optional<RatVec> weights;
      if (!weights_arg.empty()) {
        weights = parse_weights_arg(weights_arg);
      }
      report = run_aggregate(doc, rule_arg, weights);
    } else if (app.got_subcommand(witness_cmd)) {
      const ProfileDocument doc =
          parse_profile_document(read_file(profile_path));
      report = run_witness(doc, parse_axiom_arg(axiom_arg));
    } else if (app.got_subcommand(oracle_cmd)) {
      const ProfileDocument doc =
          parse_profile_document(read_file(profile_path));
      report = run_oracle(doc, parse_axiom_arg(axiom_arg), denominator);
    } else if (app.got_subcommand(equiv_cmd)) {
      const SetDocument left = parse_set_document(read_file(left_path));
      const SetDocument right = parse_set_document(read_file(right_path));
      report = run_equiv(left, right);
    } else {
      const SetDocument doc = parse_set_document(read_file(left_path));
      report = run_normalize(doc);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);

  if (pretty) {
    std::cout << report.summary << "\n";
  } else {
    report.body["command"] = join_command(argc, argv);
    report.body["elapsed_ms"] = elapsed.count();
    std::cout << report.body.dump(2) << "\n";
  }
  return report.exit_code;
}
