#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "paretocheck/lp.hpp"
#include "paretocheck/model.hpp"

namespace paretocheck {

enum class ConditionStatus { Holds, Fails, Vacuous };

/// Feasible decomposition at one checked instance.  Field meaning per
/// condition:
///   theorem1: vertex_choice = one vertex index per agent; social_weights =
///     convex weights over social vertices; agent_weights = alpha per agent.
///   pareto: social_vertex set; agent_weights = gamma per (agent, vertex),
///     flattened agent-major.
///   prop1: social_weights = theta; agent_weights = flattened gamma.
///   prop2: vertex_choice = (u_i, v_i) index pairs flattened; agent_weights
///     = alpha; negative_weights = alpha'.
/// shift is always the coefficient of the all-ones vector; strict_shifts
/// holds the per-agent barycenter coefficients of prop1 strict mode (one
/// per agent, nonnegative, at least one positive).
struct DecompositionWitness {
  std::vector<std::size_t> vertex_choice;
  std::optional<std::size_t> social_vertex;
  RatVec social_weights;
  RatVec agent_weights;
  RatVec negative_weights;
  RatVec strict_shifts;
  Rat shift = 0;
};

/// The infeasible instance, carrying the exact feasibility question and its
/// dual refutation when one exists (pure-weak systems).
struct ConditionCounterexample {
  std::vector<std::size_t> vertex_choice;
  std::optional<std::size_t> social_vertex;
  LinearSystem system;
  std::optional<FarkasCertificate> farkas;
};

struct ConditionVerdict {
  ConditionStatus status = ConditionStatus::Holds;
  std::vector<DecompositionWitness> certificates;  // Holds: one per instance
  std::optional<ConditionCounterexample> counterexample;  // Fails: first one
};

/// For every per-agent vertex combination (v1,...,vn): some social utility
/// u0 = sum alpha_i v_i + beta with alpha >= 0.  Vertex combinations are
/// exact: they are necessary as special cases, and sufficient because any
/// direction d that is nonpositive on the social set yet positive somewhere
/// on each agent's set would already be refuted at a vertex combination.
/// alpha != 0 is automatic: alpha = 0 would make u0 constant.
ConditionVerdict check_theorem1_condition(const Profile& profile);

/// For every social vertex w: w = sum gamma_ik v_ik + beta with gamma >= 0
/// (gamma absorbs alpha_i u_i = sum_k gamma_ik v_ik).  Social vertices are
/// exact by convexity: convex combinations of representable vertices are
/// representable.
ConditionVerdict check_pareto_condition(const Profile& profile);

/// Some single combination u0 = sum alpha_i u_i + beta over the whole sets.
/// strict_mode additionally requires at least one u_i to be drawn from
/// make_strictly_increasing(set_i), encoded as nonnegative barycenter
/// masses delta with sum delta_i > 0 and decided by slack maximization in
/// one feasibility call.  That system is the exact transposition dual of a
/// non-reversal violation, so strict_mode agrees with
/// check_axiom(NonReversal) whenever the profile has a no-conflict pair.
ConditionVerdict check_prop1_condition(const Profile& profile,
                                       bool strict_mode);

/// For every bi-independent per-agent ordered vertex pair ((u_i, v_i)):
/// some social u0 = sum alpha_i u_i - sum alpha'_i v_i + beta with alpha,
/// alpha' >= 0.  Vacuous when no pair combination is bi-independent.
ConditionVerdict check_prop2_condition(const Profile& profile);

/// Feasibility of the bi-utilitarian decomposition at one explicit
/// combination; pairs[i] = (vertex index for u_i, vertex index for v_i).
bool prop2_combination_feasible(
    const Profile& profile,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// rank({u_1..u_n, v_1..v_n, ones}) == 2n + 1.
bool bi_independent(const std::vector<UtilityVector>& us,
                    const std::vector<UtilityVector>& vs);

/// Hull of { sum weights_i v_i : one vertex per agent }: the weighted
/// Minkowski sum.  Requires strictly positive weights; the result passes
/// both check_theorem1_condition and check_pareto_condition by
/// construction.
UtilitySet aggregate_minkowski(const std::vector<UtilitySet>& individuals,
                               const RatVec& weights);

/// Hull of all individual vertices; validation may reject the hull when it
/// contains a constant vector.
UtilitySet aggregate_union_hull(const std::vector<UtilitySet>& individuals);

/// Mutual positive-affine coverage: every vertex of each set lies in
/// { alpha u + beta 1 : alpha > 0, u in other }.  Vertex checking suffices
/// because that affine cone is convex.
bool sets_equivalent(const UtilitySet& a, const UtilitySet& b);

/// Some member of the set is positive-affine equivalent to u: mu >= 0,
/// beta with u = sum mu_k v_k + beta 1 (total weight > 0 by nonconstancy).
bool contains_equivalent(const UtilitySet& set, const UtilityVector& u);

}  // namespace paretocheck
