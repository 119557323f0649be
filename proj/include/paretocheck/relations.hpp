#pragma once

#include <optional>
#include <string>

#include "paretocheck/model.hpp"

namespace paretocheck {

/// Exactly one case holds for any (l, l', set).
enum class Relation {
  StrictlyPreferred,    // l > l': every utility weakly agrees, one strictly
  StrictlyDispreferred, // l < l'
  Indifferent,          // l ~ l': every utility ties
  Incomparable          // l >< l': utilities disagree in sign
};

std::string relation_name(Relation r);

Rat expected_utility(const Lottery& l, const UtilityVector& u);

/// Classification of (l - l') . vertex signs over the set's vertices;
/// vertex evaluation suffices because a linear functional attains its
/// extremes over a polytope at vertices.
Relation compare(const Lottery& l, const Lottery& lp, const UtilitySet& set);

/// True iff l weakly preferred to l': Relation in {StrictlyPreferred,
/// Indifferent}.
bool weakly_prefers(Relation r);

struct StrictIncreasingCounterexample {
  RatVec direction;      // mean-zero d: d.v >= 0 at all vertices, somewhere >= 1
  UtilityVector vertex;  // set vertex with d.vertex <= 0
};

struct StrictIncreasingVerdict {
  bool holds = false;
  std::optional<StrictIncreasingCounterexample> counterexample;
};

/// A set is strictly increasing when every member strictly respects every
/// strict preference of the induced relation.  Violations are searched per
/// ordered vertex pair (strict witness vertex, tying vertex); the returned
/// direction converts to a lottery pair via direction_to_lottery_pair.
StrictIncreasingVerdict is_strictly_increasing(const UtilitySet& set);

/// Wraps the set as { u + eps * barycenter : eps > 0 }: same induced
/// relation, and strictly increasing because the barycenter averages vertex
/// values that are all >= 0 with one > 0 whenever l > l'.
StrictlyIncreasingSet make_strictly_increasing(const UtilitySet& set);

}  // namespace paretocheck
