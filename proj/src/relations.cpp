#include "paretocheck/relations.hpp"

#include "paretocheck/lp.hpp"

namespace paretocheck {

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::StrictlyPreferred:
      return "strictly-preferred";
    case Relation::StrictlyDispreferred:
      return "strictly-dispreferred";
    case Relation::Indifferent:
      return "indifferent";
    case Relation::Incomparable:
      return "incomparable";
  }
  return "";
}

Rat expected_utility(const Lottery& l, const UtilityVector& u) {
  return dot(l.probs, u);
}

Relation compare(const Lottery& l, const Lottery& lp, const UtilitySet& set) {
  if (l.probs.size() != lp.probs.size()) {
    throw ValidationError("compare: mismatched outcome spaces");
  }
  bool any_pos = false;
  bool any_neg = false;
  for (const UtilityVector& v : set.vertices) {
    const Rat s = dot(l.probs, v) - dot(lp.probs, v);
    if (s > 0) any_pos = true;
    if (s < 0) any_neg = true;
    if (any_pos && any_neg) return Relation::Incomparable;
  }
  if (any_pos) return Relation::StrictlyPreferred;
  if (any_neg) return Relation::StrictlyDispreferred;
  return Relation::Indifferent;
}

bool weakly_prefers(Relation r) {
  return r == Relation::StrictlyPreferred || r == Relation::Indifferent;
}

StrictIncreasingVerdict is_strictly_increasing(const UtilitySet& set) {
  const std::size_t dim = set.vertices.front().size();
  // A violation is a strict preference d (mean-zero, nonnegative at every
  // vertex, strictly positive somewhere) that some vertex fails to respect.
  // Both the "somewhere" and the failing vertex are discharged at vertices.
  for (const UtilityVector& strict_vertex : set.vertices) {
    for (const UtilityVector& tying_vertex : set.vertices) {
      LinearSystem sys(dim);
      sys.add_eq(RatVec(dim, Rat(1)), Rat(0));
      for (const UtilityVector& v : set.vertices) {
        sys.add_ge(v, Rat(0));
      }
      sys.add_gt(strict_vertex, Rat(0));
      sys.add_le(tying_vertex, Rat(0));
      const FeasibilityResult res =
          solve_feasibility(sys, StrictStrategy::NormalizeOne);
      if (res.feasible) {
        return {false,
                StrictIncreasingCounterexample{res.witness, tying_vertex}};
      }
    }
  }
  return {true, std::nullopt};
}

StrictlyIncreasingSet make_strictly_increasing(const UtilitySet& set) {
  const std::size_t dim = set.vertices.front().size();
  UtilityVector barycenter(dim, Rat(0));
  for (const UtilityVector& v : set.vertices) {
    for (std::size_t z = 0; z < dim; ++z) barycenter[z] += v[z];
  }
  for (Rat& x : barycenter) x /= static_cast<int>(set.vertices.size());
  return StrictlyIncreasingSet{set, std::move(barycenter)};
}

}  // namespace paretocheck
