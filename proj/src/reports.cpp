#include "paretocheck/reports.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace paretocheck {

namespace {

Json set_document_json(const OutcomeSpace& space, const UtilitySet& set) {
  Json vertices = Json::array();
  for (const auto& v : set.vertices) {
    vertices.push_back(vector_to_json(v));
  }
  return Json{{"outcomes", space.labels}, {"vertices", vertices}};
}

Json relations_json(const std::vector<std::string>& ids,
                    const std::vector<Relation>& relations) {
  Json out = Json::array();
  for (std::size_t i = 0; i < relations.size(); ++i) {
    out.push_back(
        Json{{"agent", ids[i]}, {"relation", relation_name(relations[i])}});
  }
  return out;
}

Json hypotheses_json(const Profile& profile) {
  Json pair = nullptr;
  if (auto found = no_conflict_pair(profile)) {
    pair = Json::array({profile.space.labels[found->first],
                        profile.space.labels[found->second]});
  }
  Json agents = Json::array();
  for (const auto& set : profile.individuals) {
    agents.push_back(is_strictly_increasing(set).holds);
  }
  return Json{{"no_conflict_pair", pair},
              {"strictly_increasing",
               Json{{"agents", agents},
                    {"social", is_strictly_increasing(profile.social).holds}}}};
}

Json witness_json(const ProfileDocument& doc, const AxiomWitness& witness,
                  bool verified) {
  return Json{{"l", vector_to_json(witness.l.probs)},
              {"l_prime", vector_to_json(witness.lp.probs)},
              {"individual_relations",
               relations_json(doc.agent_ids, witness.individual_relations)},
              {"social_relation", relation_name(witness.social_relation)},
              {"verified", verified}};
}

void append_witness_lines(std::ostringstream& out, const ProfileDocument& doc,
                          const AxiomWitness& witness) {
  out << "\n  l  = " << format_vector(witness.l.probs);
  out << "\n  l' = " << format_vector(witness.lp.probs);
  for (std::size_t i = 0; i < witness.individual_relations.size(); ++i) {
    out << "\n  " << doc.agent_ids[i] << ": "
        << relation_name(witness.individual_relations[i]);
  }
  out << "\n  social: " << relation_name(witness.social_relation);
}

/// Re-nests a flattened agent-major weight vector by each agent's vertex
/// count.
Json nested_weights(const Profile& profile, const RatVec& flat) {
  Json out = Json::array();
  std::size_t at = 0;
  for (const auto& set : profile.individuals) {
    Json row = Json::array();
    for (std::size_t k = 0; k < set.vertices.size(); ++k) {
      row.push_back(rational_to_json(flat.at(at++)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json pair_combination_json(const std::vector<std::size_t>& flat_pairs) {
  Json out = Json::array();
  for (std::size_t i = 0; i + 1 < flat_pairs.size(); i += 2) {
    out.push_back(Json::array({flat_pairs[i], flat_pairs[i + 1]}));
  }
  return out;
}

Json certificate_json(const Profile& profile, const std::string& which,
                      const DecompositionWitness& witness) {
  Json out = Json::object();
  if (which == "theorem1") {
    out["combination"] = witness.vertex_choice;
    out["social_weights"] = vector_to_json(witness.social_weights);
    out["agent_weights"] = vector_to_json(witness.agent_weights);
  } else if (which == "pareto") {
    out["social_vertex"] = *witness.social_vertex;
    out["agent_weights"] = nested_weights(profile, witness.agent_weights);
  } else if (which == "prop1") {
    out["social_weights"] = vector_to_json(witness.social_weights);
    out["agent_weights"] = nested_weights(profile, witness.agent_weights);
    if (!witness.strict_shifts.empty()) {
      out["strict_shifts"] = vector_to_json(witness.strict_shifts);
    }
  } else {
    out["combination"] = pair_combination_json(witness.vertex_choice);
    out["agent_weights"] = vector_to_json(witness.agent_weights);
    out["negative_weights"] = vector_to_json(witness.negative_weights);
  }
  out["shift"] = rational_to_json(witness.shift);
  return out;
}

Json counterexample_json(const std::string& which,
                         const ConditionCounterexample& counterexample) {
  Json out = Json::object();
  if (which == "prop2") {
    out["combination"] = pair_combination_json(counterexample.vertex_choice);
  } else if (!counterexample.vertex_choice.empty()) {
    out["combination"] = counterexample.vertex_choice;
  }
  if (counterexample.social_vertex) {
    out["social_vertex"] = *counterexample.social_vertex;
  }
  if (counterexample.farkas) {
    out["farkas"] = vector_to_json(counterexample.farkas->multipliers);
  } else {
    out["farkas"] = nullptr;
  }
  return out;
}

std::string status_name(ConditionStatus status) {
  switch (status) {
    case ConditionStatus::Holds:
      return "holds";
    case ConditionStatus::Fails:
      return "fails";
    case ConditionStatus::Vacuous:
      return "vacuous";
  }
  throw std::logic_error("unreachable condition status");
}

}  // namespace

std::string format_vector(const RatVec& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) {
      out += ", ";
    }
    out += format_rational(values[i]);
  }
  out += ")";
  return out;
}

Json lottery_to_json(const Lottery& l) { return vector_to_json(l.probs); }

OperationReport run_check_axiom(const ProfileDocument& doc, Axiom axiom) {
  const AxiomVerdict verdict = check_axiom(doc.profile, axiom);
  OperationReport report;
  report.body["operation"] = "check-axiom";
  report.body["axiom"] = axiom_name(axiom);
  report.body["verdict"] = verdict.holds ? "holds" : "violated";
  std::ostringstream summary;
  summary << axiom_name(axiom) << ": " << (verdict.holds ? "holds" : "violated");
  if (!verdict.holds) {
    const AxiomWitness& witness = *verdict.witness;
    const bool verified =
        verify_certificate(doc.profile, axiom, witness.l, witness.lp);
    report.body["witness"] = witness_json(doc, witness, verified);
    append_witness_lines(summary, doc, witness);
    report.exit_code = 1;
  }
  report.body["hypotheses"] = hypotheses_json(doc.profile);
  report.summary = summary.str();
  report.body["summary"] = report.summary;
  return report;
}

OperationReport run_witness(const ProfileDocument& doc, Axiom axiom) {
  OperationReport report = run_check_axiom(doc, axiom);
  report.body["operation"] = "witness";
  if (report.exit_code == 0) {
    report.summary = axiom_name(axiom) + ": holds; no witness pair exists";
    report.body["summary"] = report.summary;
  }
  return report;
}

OperationReport run_check_condition(const ProfileDocument& doc,
                                    const std::string& which, bool strict) {
  if (strict && which != "prop1") {
    throw std::invalid_argument("--strict applies to prop1 only");
  }
  const Profile& profile = doc.profile;
  ConditionVerdict verdict;
  if (which == "theorem1") {
    verdict = check_theorem1_condition(profile);
  } else if (which == "pareto") {
    verdict = check_pareto_condition(profile);
  } else if (which == "prop1") {
    verdict = check_prop1_condition(profile, strict);
  } else if (which == "prop2") {
    verdict = check_prop2_condition(profile);
  } else {
    throw std::invalid_argument("unknown condition: " + which);
  }

  OperationReport report;
  report.body["operation"] = "check-condition";
  report.body["condition"] = which;
  if (which == "prop1") {
    report.body["strict"] = strict;
  }
  report.body["verdict"] = status_name(verdict.status);

  std::ostringstream summary;
  summary << which << ": " << status_name(verdict.status);
  if (verdict.status == ConditionStatus::Holds) {
    Json certificates = Json::array();
    for (const auto& certificate : verdict.certificates) {
      certificates.push_back(certificate_json(profile, which, certificate));
    }
    report.body["certificates"] = std::move(certificates);
    if (which == "theorem1") {
      summary << " (" << verdict.certificates.size()
              << " vertex combinations, each with a weighted-utilitarian"
                 " decomposition)";
    } else if (which == "pareto") {
      summary << " (" << verdict.certificates.size()
              << " social vertices, each a nonnegative combination)";
    } else if (which == "prop1") {
      summary << " (single whole-set combination)";
    } else {
      summary << " (" << verdict.certificates.size()
              << " bi-independent pair combinations)";
    }
  } else if (verdict.status == ConditionStatus::Fails) {
    const ConditionCounterexample& ce = *verdict.counterexample;
    report.body["counterexample"] = counterexample_json(which, ce);
    report.exit_code = 1;
    if (which == "pareto") {
      summary << " at social vertex " << *ce.social_vertex;
    } else if (which == "prop1") {
      summary << " (no feasible combination of the individual sets)";
    } else {
      summary << " at combination [";
      for (std::size_t i = 0; i < ce.vertex_choice.size(); ++i) {
        if (i != 0) {
          summary << ", ";
        }
        summary << ce.vertex_choice[i];
      }
      summary << "]";
    }
  } else {
    summary << " (no bi-independent vertex pair combination)";
  }
  report.body["hypotheses"] = hypotheses_json(profile);
  report.summary = summary.str();
  report.body["summary"] = report.summary;
  return report;
}

OperationReport run_oracle(const ProfileDocument& doc, Axiom axiom,
                           std::size_t denominator) {
  const GridSpec spec{denominator};
  const std::vector<GridViolation> violations =
      grid_check(doc.profile, axiom, spec);
  constexpr std::size_t kMaxPairs = 100;

  OperationReport report;
  report.body["operation"] = "oracle";
  report.body["axiom"] = axiom_name(axiom);
  report.body["denominator"] = denominator;
  report.body["violation_count"] = violations.size();
  report.body["truncated"] = violations.size() > kMaxPairs;
  Json pairs = Json::array();
  for (std::size_t i = 0; i < violations.size() && i < kMaxPairs; ++i) {
    const GridViolation& v = violations[i];
    pairs.push_back(
        Json{{"l", vector_to_json(v.l.probs)},
             {"l_prime", vector_to_json(v.lp.probs)},
             {"individual_relations",
              relations_json(doc.agent_ids, v.individual_relations)},
             {"social_relation", relation_name(v.social_relation)}});
  }
  report.body["pairs"] = std::move(pairs);
  report.body["hypotheses"] = hypotheses_json(doc.profile);
  report.exit_code = violations.empty() ? 0 : 1;

  std::ostringstream summary;
  summary << axiom_name(axiom) << " at denominator " << denominator << ": ";
  if (violations.empty()) {
    summary << "no violations on the grid";
  } else {
    summary << violations.size() << " violating ordered pair(s)";
  }
  report.summary = summary.str();
  report.body["summary"] = report.summary;
  return report;
}

OperationReport run_aggregate(const AgentsDocument& doc,
                              const std::string& rule,
                              const std::optional<RatVec>& weights) {
  UtilitySet social;
  if (rule == "minkowski") {
    const RatVec applied =
        weights ? *weights : RatVec(doc.agents.size(), Rat(1));
    social = aggregate_minkowski(doc.agents, applied);
  } else if (rule == "union-hull") {
    if (weights) {
      throw std::invalid_argument("--weights applies to minkowski only");
    }
    social = aggregate_union_hull(doc.agents);
  } else {
    throw std::invalid_argument("unknown aggregation rule: " + rule);
  }

  OperationReport report;
  report.body = set_document_json(doc.space, social);
  std::ostringstream summary;
  summary << rule << " aggregate of " << doc.agents.size() << " agents: "
          << social.vertices.size() << " social vertex(es)";
  for (const auto& vertex : social.vertices) {
    summary << "\n  " << format_vector(vertex);
  }
  report.summary = summary.str();
  return report;
}

OperationReport run_equiv(const SetDocument& a, const SetDocument& b) {
  if (a.space.labels != b.space.labels) {
    throw ValidationError("outcome spaces differ between the two sets");
  }
  const bool equivalent = sets_equivalent(a.set, b.set);
  OperationReport report;
  report.body["operation"] = "equiv";
  report.body["equivalent"] = equivalent;
  report.summary = equivalent
                       ? "equivalent: the sets induce the same relation"
                       : "not equivalent";
  report.body["summary"] = report.summary;
  report.exit_code = equivalent ? 0 : 1;
  return report;
}

OperationReport run_normalize(const SetDocument& doc) {
  std::vector<UtilityVector> normalized;
  normalized.reserve(doc.set.vertices.size());
  for (const auto& vertex : doc.set.vertices) {
    normalized.push_back(normalize_utility(vertex));
  }
  const UtilitySet canonical = validate_utility_set(std::move(normalized));

  OperationReport report;
  report.body = set_document_json(doc.space, canonical);
  std::ostringstream summary;
  summary << "normalized " << doc.set.vertices.size() << " vertex(es) to "
          << canonical.vertices.size() << " canonical representative(s)";
  for (const auto& vertex : canonical.vertices) {
    summary << "\n  " << format_vector(vertex);
  }
  report.summary = summary.str();
  return report;
}

}  // namespace paretocheck
