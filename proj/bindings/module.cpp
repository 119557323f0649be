#include <pybind11/pybind11.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "paretocheck/reports.hpp"

namespace py = pybind11;

namespace {

using namespace paretocheck;

Axiom axiom_or_throw(const std::string& name) {
  if (auto axiom = axiom_from_name(name)) {
    return *axiom;
  }
  throw std::invalid_argument("unknown axiom: " + name);
}

Lottery lottery_from_text(const std::string& text, const std::string& where) {
  return make_lottery(vector_from_json(Json::parse(text), where));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact checkers for Pareto axioms and utilitarian representations of"
      " incomplete expected-utility preferences.  Every function takes and"
      " returns JSON text; the paretocheck package wraps them with dicts.";

  m.def(
      "check_axiom_json",
      [](const std::string& profile_text, const std::string& axiom) {
        const ProfileDocument doc = parse_profile_document(profile_text);
        return run_check_axiom(doc, axiom_or_throw(axiom)).body.dump();
      },
      py::arg("profile_text"), py::arg("axiom"),
      "Decide an axiom exactly; the report carries a verified witness pair"
      " when violated.");

  m.def(
      "check_condition_json",
      [](const std::string& profile_text, const std::string& condition,
         bool strict) {
        const ProfileDocument doc = parse_profile_document(profile_text);
        return run_check_condition(doc, condition, strict).body.dump();
      },
      py::arg("profile_text"), py::arg("condition"),
      py::arg("strict") = false,
      "Decide a representation condition: theorem1, pareto, prop1 (with"
      " optional strict open-cone mode), or prop2.");

  m.def(
      "oracle_json",
      [](const std::string& profile_text, const std::string& axiom,
         std::size_t denominator) {
        const ProfileDocument doc = parse_profile_document(profile_text);
        return run_oracle(doc, axiom_or_throw(axiom), denominator).body.dump();
      },
      py::arg("profile_text"), py::arg("axiom"), py::arg("denominator") = 5,
      "Extensional grid scan of every ordered lottery pair with"
      " denominator-D probabilities.");

  m.def(
      "aggregate_json",
      [](const std::string& agents_text, const std::string& rule,
         const std::string& weights_text) {
        const AgentsDocument doc = parse_agents_document(agents_text);
        std::optional<RatVec> weights;
        if (!weights_text.empty()) {
          weights = vector_from_json(Json::parse(weights_text), "weights");
        }
        return run_aggregate(doc, rule, weights).body.dump();
      },
      py::arg("agents_text"), py::arg("rule"), py::arg("weights_text") = "",
      "Build a social set document by the minkowski or union-hull rule;"
      " weights_text is a JSON array of positive rationals.");

  m.def(
      "equiv_json",
      [](const std::string& left_text, const std::string& right_text) {
        return run_equiv(parse_set_document(left_text),
                         parse_set_document(right_text))
            .body.dump();
      },
      py::arg("left_text"), py::arg("right_text"),
      "Decide whether two set documents induce the same relation.");

  m.def(
      "normalize_set_json",
      [](const std::string& set_text) {
        return run_normalize(parse_set_document(set_text)).body.dump();
      },
      py::arg("set_text"),
      "Canonicalize every vertex to mean zero and range one.");

  m.def(
      "verify_certificate_json",
      [](const std::string& profile_text, const std::string& axiom,
         const std::string& l_text, const std::string& lp_text) {
        const ProfileDocument doc = parse_profile_document(profile_text);
        return verify_certificate(doc.profile, axiom_or_throw(axiom),
                                  lottery_from_text(l_text, "l"),
                                  lottery_from_text(lp_text, "l_prime"));
      },
      py::arg("profile_text"), py::arg("axiom"), py::arg("l_text"),
      py::arg("lp_text"),
      "Re-verify one ordered lottery pair (JSON arrays of rationals)"
      " against the axiom's violation predicate.");

  m.def(
      "no_conflict_pair_json",
      [](const std::string& profile_text) {
        const ProfileDocument doc = parse_profile_document(profile_text);
        Json out = nullptr;
        if (auto pair = no_conflict_pair(doc.profile)) {
          out = Json::array({doc.profile.space.labels[pair->first],
                             doc.profile.space.labels[pair->second]});
        }
        return Json{{"no_conflict_pair", out}}.dump();
      },
      py::arg("profile_text"),
      "First outcome pair unanimously strictly ranked by every individual"
      " utility, or null.");
}
