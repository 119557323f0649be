#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "paretocheck/rational.hpp"

namespace paretocheck {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutcomeSpace {
  std::vector<std::string> labels;

  std::size_t size() const { return labels.size(); }
};

/// Validates: at least two labels, all nonempty and distinct.
OutcomeSpace make_outcome_space(std::vector<std::string> labels);

/// Probabilities aligned with the outcome order.
struct Lottery {
  RatVec probs;
};

/// Validates: entries >= 0 summing to exactly 1.
Lottery make_lottery(RatVec probs);

/// Utility values aligned with the outcome order.  Nonconstancy is enforced
/// wherever a vector enters a set or a normalization.
using UtilityVector = RatVec;

/// V-representation: the set is the convex hull of the vertices.
/// Constructed through validate_utility_set, after which the vertex list is
/// deduplicated and the hull contains no constant vector.
struct UtilitySet {
  std::vector<UtilityVector> vertices;
};

/// The non-closed set { u + eps * barycenter : u in base hull, eps > 0 }.
/// Never materialized as a vertex list; its induced preference relation
/// equals the base's, and only checkers consuming eps > 0 look past base.
struct StrictlyIncreasingSet {
  UtilitySet base;
  UtilityVector barycenter;
};

struct Profile {
  OutcomeSpace space;
  std::vector<UtilitySet> individuals;  // n >= 2
  UtilitySet social;

  std::size_t num_agents() const { return individuals.size(); }
};

/// Deduplicates, rejects constant vertices, and rejects hulls containing a
/// constant vector (an LP check: no convex combination of vertices may be
/// constant).  Error messages name the offending vertex.
UtilitySet validate_utility_set(std::vector<UtilityVector> vertices);

/// Validates n >= 2 and that every vertex length matches the space.
Profile make_profile(OutcomeSpace space, std::vector<UtilitySet> individuals,
                     UtilitySet social);

/// Canonical representative of the positive-affine class: mean zero and
/// range one.  Rejects constant input.
UtilityVector normalize_utility(const UtilityVector& u);

/// True iff u = alpha u' + beta for some alpha > 0: equality of the
/// canonical representatives.
bool utilities_equivalent(const UtilityVector& u, const UtilityVector& v);

/// First ordered outcome pair (z*, z_*) with u(z*) > u(z_*) at every vertex
/// of every individual set, scanning in lexicographic index order; strict
/// inequality at all vertices extends to the hulls.
std::optional<std::pair<std::size_t, std::size_t>> no_conflict_pair(
    const Profile& profile);

}  // namespace paretocheck
