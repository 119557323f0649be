#include "paretocheck/model.hpp"

#include <algorithm>
#include <set>

#include "paretocheck/lp.hpp"

namespace paretocheck {

OutcomeSpace make_outcome_space(std::vector<std::string> labels) {
  if (labels.size() < 2) {
    throw ValidationError("outcome space: need at least 2 outcomes, got " +
                          std::to_string(labels.size()));
  }
  std::set<std::string> seen;
  for (const std::string& label : labels) {
    if (label.empty()) {
      throw ValidationError("outcome space: empty label");
    }
    if (!seen.insert(label).second) {
      throw ValidationError("outcome space: duplicate label '" + label + "'");
    }
  }
  return OutcomeSpace{std::move(labels)};
}

Lottery make_lottery(RatVec probs) {
  for (std::size_t z = 0; z < probs.size(); ++z) {
    if (probs[z] < 0) {
      throw ValidationError("lottery: negative probability at coordinate " +
                            std::to_string(z));
    }
  }
  if (vec_sum(probs) != 1) {
    throw ValidationError("lottery: probabilities sum to " +
                          format_rational(vec_sum(probs)) + ", not 1");
  }
  return Lottery{std::move(probs)};
}

UtilitySet validate_utility_set(std::vector<UtilityVector> vertices) {
  if (vertices.empty()) {
    throw ValidationError("utility set: empty vertex list");
  }
  const std::size_t dim = vertices.front().size();
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (vertices[k].size() != dim) {
      throw ValidationError("utility set: vertex " + std::to_string(k) +
                            " has length " +
                            std::to_string(vertices[k].size()) +
                            ", expected " + std::to_string(dim));
    }
    if (is_constant_vec(vertices[k])) {
      throw ValidationError("utility set: vertex " + std::to_string(k) +
                            " is constant");
    }
  }

  std::vector<UtilityVector> dedup;
  for (UtilityVector& v : vertices) {
    if (std::find(dedup.begin(), dedup.end(), v) == dedup.end()) {
      dedup.push_back(std::move(v));
    }
  }

  // Hull-constancy: feasible convex weights theta with sum theta_k v_k
  // constant would put a constant in the hull.  Variables: theta, then the
  // constant's value c (free).
  const std::size_t k = dedup.size();
  LinearSystem sys(k + 1);
  for (std::size_t z = 0; z < dim; ++z) {
    RatVec row(k + 1, Rat(0));
    for (std::size_t j = 0; j < k; ++j) row[j] = dedup[j][z];
    row[k] = -1;
    sys.add_eq(std::move(row), Rat(0));
  }
  {
    RatVec row(k + 1, Rat(1));
    row[k] = 0;
    sys.add_eq(std::move(row), Rat(1));
  }
  for (std::size_t j = 0; j < k; ++j) {
    RatVec row(k + 1, Rat(0));
    row[j] = 1;
    sys.add_ge(std::move(row), Rat(0));
  }
  const FeasibilityResult res = solve_feasibility(sys);
  if (res.feasible) {
    throw ValidationError(
        "utility set: hull contains the constant vector with value " +
        format_rational(res.witness[k]));
  }
  return UtilitySet{std::move(dedup)};
}

Profile make_profile(OutcomeSpace space, std::vector<UtilitySet> individuals,
                     UtilitySet social) {
  if (individuals.size() < 2) {
    throw ValidationError("profile: need at least 2 individuals, got " +
                          std::to_string(individuals.size()));
  }
  const std::size_t dim = space.size();
  auto check_set = [dim](const UtilitySet& set, const std::string& who) {
    for (std::size_t k = 0; k < set.vertices.size(); ++k) {
      if (set.vertices[k].size() != dim) {
        throw ValidationError("profile: " + who + " vertex " +
                              std::to_string(k) +
                              " does not match the outcome count");
      }
    }
  };
  for (std::size_t i = 0; i < individuals.size(); ++i) {
    check_set(individuals[i], "individual " + std::to_string(i));
  }
  check_set(social, "social");
  return Profile{std::move(space), std::move(individuals), std::move(social)};
}

UtilityVector normalize_utility(const UtilityVector& u) {
  if (is_constant_vec(u)) {
    throw ValidationError("normalize_utility: constant input");
  }
  const Rat mean = vec_sum(u) / static_cast<int>(u.size());
  const Rat range = *std::max_element(u.begin(), u.end()) -
                    *std::min_element(u.begin(), u.end());
  UtilityVector out(u.size());
  for (std::size_t z = 0; z < u.size(); ++z) out[z] = (u[z] - mean) / range;
  return out;
}

bool utilities_equivalent(const UtilityVector& u, const UtilityVector& v) {
  if (u.size() != v.size()) {
    throw ValidationError("utilities_equivalent: mismatched outcome spaces");
  }
  return normalize_utility(u) == normalize_utility(v);
}

std::optional<std::pair<std::size_t, std::size_t>> no_conflict_pair(
    const Profile& profile) {
  const std::size_t dim = profile.space.size();
  for (std::size_t hi = 0; hi < dim; ++hi) {
    for (std::size_t lo = 0; lo < dim; ++lo) {
      if (hi == lo) continue;
      bool ok = true;
      for (const UtilitySet& set : profile.individuals) {
        for (const UtilityVector& v : set.vertices) {
          if (v[hi] <= v[lo]) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok) return std::make_pair(hi, lo);
    }
  }
  return std::nullopt;
}

}  // namespace paretocheck
