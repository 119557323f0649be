#pragma once

#include <optional>
#include <string>

#include "paretocheck/axioms.hpp"
#include "paretocheck/conditions.hpp"
#include "paretocheck/grid.hpp"
#include "paretocheck/io.hpp"

namespace paretocheck {

/// One executed operation: machine-readable body, one-glance text, and the
/// verdict-derived exit code (0 holds/true, 1 violated/false).  Input
/// errors are exceptions, mapped to exit code 2 by the caller.
struct OperationReport {
  Json body;
  std::string summary;
  int exit_code = 0;
};

OperationReport run_check_axiom(const ProfileDocument& doc, Axiom axiom);

/// which is one of "theorem1", "pareto", "prop1", "prop2".
OperationReport run_check_condition(const ProfileDocument& doc,
                                    const std::string& which, bool strict);

OperationReport run_witness(const ProfileDocument& doc, Axiom axiom);

OperationReport run_oracle(const ProfileDocument& doc, Axiom axiom,
                           std::size_t denominator);

/// rule is "minkowski" (uses weights, default all ones) or "union-hull".
/// The body is a set document, consumable by equiv/normalize.
OperationReport run_aggregate(const AgentsDocument& doc,
                              const std::string& rule,
                              const std::optional<RatVec>& weights);

OperationReport run_equiv(const SetDocument& a, const SetDocument& b);

/// Body: the set document with every vertex normalized (deduplicated when
/// normalization collapses vertices).
OperationReport run_normalize(const SetDocument& doc);

Json lottery_to_json(const Lottery& l);
std::string format_vector(const RatVec& values);

}  // namespace paretocheck
