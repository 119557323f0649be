#include "paretocheck/conditions.hpp"

#include <algorithm>

#include "paretocheck/enumerate.hpp"
#include "paretocheck/relations.hpp"

namespace paretocheck {

namespace {

ConditionVerdict fail_at(std::vector<std::size_t> vertex_choice,
                         std::optional<std::size_t> social_vertex,
                         LinearSystem system,
                         std::optional<FarkasCertificate> farkas) {
  ConditionVerdict verdict;
  verdict.status = ConditionStatus::Fails;
  verdict.counterexample = ConditionCounterexample{
      std::move(vertex_choice), social_vertex, std::move(system),
      std::move(farkas)};
  return verdict;
}

LinearSystem prop2_system(const Profile& profile,
                          const std::vector<UtilityVector>& us,
                          const std::vector<UtilityVector>& vs) {
  const std::size_t dim = profile.space.size();
  const std::size_t m = profile.social.vertices.size();
  const std::size_t n = us.size();
  // Variables: theta(m), alpha(n), alpha'(n), beta.
  LinearSystem sys(m + 2 * n + 1);
  for (std::size_t z = 0; z < dim; ++z) {
    RatVec row(sys.num_vars, Rat(0));
    for (std::size_t j = 0; j < m; ++j) row[j] = profile.social.vertices[j][z];
    for (std::size_t i = 0; i < n; ++i) {
      row[m + i] = -us[i][z];
      row[m + n + i] = vs[i][z];
    }
    row[m + 2 * n] = -1;
    sys.add_eq(std::move(row), Rat(0));
  }
  {
    RatVec row(sys.num_vars, Rat(0));
    for (std::size_t j = 0; j < m; ++j) row[j] = 1;
    sys.add_eq(std::move(row), Rat(1));
  }
  for (std::size_t j = 0; j < m + 2 * n; ++j) {
    RatVec row(sys.num_vars, Rat(0));
    row[j] = 1;
    sys.add_ge(std::move(row), Rat(0));
  }
  return sys;
}

}  // namespace

ConditionVerdict check_theorem1_condition(const Profile& profile) {
  const std::size_t dim = profile.space.size();
  const std::size_t m = profile.social.vertices.size();
  const std::size_t n = profile.num_agents();

  std::vector<std::size_t> radix;
  radix.reserve(n);
  for (const UtilitySet& set : profile.individuals) {
    radix.push_back(set.vertices.size());
  }

  ConditionVerdict verdict;
  for_each_selection(radix, [&](const std::vector<std::size_t>& sel) {
    // Variables: theta(m), alpha(n), beta.
    LinearSystem sys(m + n + 1);
    for (std::size_t z = 0; z < dim; ++z) {
      RatVec row(sys.num_vars, Rat(0));
      for (std::size_t j = 0; j < m; ++j) {
        row[j] = profile.social.vertices[j][z];
      }
      for (std::size_t i = 0; i < n; ++i) {
        row[m + i] = -profile.individuals[i].vertices[sel[i]][z];
      }
      row[m + n] = -1;
      sys.add_eq(std::move(row), Rat(0));
    }
    {
      RatVec row(sys.num_vars, Rat(0));
      for (std::size_t j = 0; j < m; ++j) row[j] = 1;
      sys.add_eq(std::move(row), Rat(1));
    }
    for (std::size_t j = 0; j < m + n; ++j) {
      RatVec row(sys.num_vars, Rat(0));
      row[j] = 1;
      sys.add_ge(std::move(row), Rat(0));
    }
    FeasibilityResult res = solve_feasibility(sys);
    if (!res.feasible) {
      verdict = fail_at(sel, std::nullopt, std::move(sys),
                        std::move(res.farkas));
      return true;
    }
    DecompositionWitness cert;
    cert.vertex_choice = sel;
    cert.social_weights.assign(res.witness.begin(), res.witness.begin() + m);
    cert.agent_weights.assign(res.witness.begin() + m,
                              res.witness.begin() + m + n);
    cert.shift = res.witness[m + n];
    verdict.certificates.push_back(std::move(cert));
    return false;
  });
  return verdict;
}

ConditionVerdict check_pareto_condition(const Profile& profile) {
  const std::size_t dim = profile.space.size();
  std::size_t total_vertices = 0;
  for (const UtilitySet& set : profile.individuals) {
    total_vertices += set.vertices.size();
  }

  ConditionVerdict verdict;
  for (std::size_t w = 0; w < profile.social.vertices.size(); ++w) {
    // Variables: gamma per (agent, vertex) flattened agent-major, beta.
    LinearSystem sys(total_vertices + 1);
    for (std::size_t z = 0; z < dim; ++z) {
      RatVec row(sys.num_vars, Rat(0));
      std::size_t col = 0;
      for (const UtilitySet& set : profile.individuals) {
        for (const UtilityVector& v : set.vertices) row[col++] = v[z];
      }
      row[total_vertices] = 1;
      sys.add_eq(std::move(row), profile.social.vertices[w][z]);
    }
    for (std::size_t j = 0; j < total_vertices; ++j) {
      RatVec row(sys.num_vars, Rat(0));
      row[j] = 1;
      sys.add_ge(std::move(row), Rat(0));
    }
    FeasibilityResult res = solve_feasibility(sys);
    if (!res.feasible) {
      return fail_at({}, w, std::move(sys), std::move(res.farkas));
    }
    DecompositionWitness cert;
    cert.social_vertex = w;
    cert.agent_weights.assign(res.witness.begin(),
                              res.witness.begin() + total_vertices);
    cert.shift = res.witness[total_vertices];
    verdict.certificates.push_back(std::move(cert));
  }
  return verdict;
}

ConditionVerdict check_prop1_condition(const Profile& profile,
                                       bool strict_mode) {
  const std::size_t dim = profile.space.size();
  const std::size_t m = profile.social.vertices.size();
  const std::size_t n = profile.num_agents();
  std::vector<std::size_t> counts;
  counts.reserve(n);
  std::size_t total_vertices = 0;
  for (const UtilitySet& set : profile.individuals) {
    counts.push_back(set.vertices.size());
    total_vertices += set.vertices.size();
  }

  if (!strict_mode) {
    // Variables: theta(m), gamma(total), beta; gamma absorbs alpha_i u_i.
    LinearSystem sys(m + total_vertices + 1);
    for (std::size_t z = 0; z < dim; ++z) {
      RatVec row(sys.num_vars, Rat(0));
      for (std::size_t j = 0; j < m; ++j) {
        row[j] = profile.social.vertices[j][z];
      }
      std::size_t col = m;
      for (const UtilitySet& set : profile.individuals) {
        for (const UtilityVector& v : set.vertices) row[col++] = -v[z];
      }
      row[m + total_vertices] = -1;
      sys.add_eq(std::move(row), Rat(0));
    }
    {
      RatVec row(sys.num_vars, Rat(0));
      for (std::size_t j = 0; j < m; ++j) row[j] = 1;
      sys.add_eq(std::move(row), Rat(1));
    }
    for (std::size_t j = 0; j < m + total_vertices; ++j) {
      RatVec row(sys.num_vars, Rat(0));
      row[j] = 1;
      sys.add_ge(std::move(row), Rat(0));
    }
    FeasibilityResult res = solve_feasibility(sys);
    if (!res.feasible) {
      return fail_at({}, std::nullopt, std::move(sys), std::move(res.farkas));
    }
    ConditionVerdict verdict;
    DecompositionWitness cert;
    cert.social_weights.assign(res.witness.begin(), res.witness.begin() + m);
    cert.agent_weights.assign(res.witness.begin() + m,
                              res.witness.begin() + m + total_vertices);
    cert.shift = res.witness[m + total_vertices];
    verdict.certificates.push_back(std::move(cert));
    return verdict;
  }

  // strict_mode: a violating direction d has d.v >= 0 on every individual
  // vertex, d.bary_i > 0 for every agent (some vertex strict, given all are
  // nonnegative), and d.w <= 0 on the social set.  Transposing that system:
  // theta convex, gamma >= 0, delta >= 0 with sum_i delta_i > 0, beta free,
  //   sum_j theta_j w_j = sum_ik gamma_ik v_ik + sum_i delta_i bary_i + beta.
  // delta_i > 0 makes agent i's reconstructed u_i a member of
  // make_strictly_increasing(set_i) after rescaling: u + eps * bary_i with
  // eps > 0.  The social member sum theta_j w_j stays in the closed hull;
  // demanding a barycenter shift there as well would reject profiles whose
  // social set touches the boundary of the agents' cone even though no
  // reversal direction exists.
  std::vector<UtilityVector> barys;
  barys.reserve(n);
  for (const UtilitySet& set : profile.individuals) {
    barys.push_back(make_strictly_increasing(set).barycenter);
  }

  // Variables: theta(m), gamma(total), delta(n), beta.
  const std::size_t delta0 = m + total_vertices;
  LinearSystem sys(delta0 + n + 1);
  for (std::size_t z = 0; z < dim; ++z) {
    RatVec row(sys.num_vars, Rat(0));
    for (std::size_t j = 0; j < m; ++j) {
      row[j] = profile.social.vertices[j][z];
    }
    std::size_t col = m;
    for (const UtilitySet& set : profile.individuals) {
      for (const UtilityVector& v : set.vertices) row[col++] = -v[z];
    }
    for (std::size_t i = 0; i < n; ++i) row[delta0 + i] = -barys[i][z];
    row[delta0 + n] = -1;
    sys.add_eq(std::move(row), Rat(0));
  }
  {
    RatVec row(sys.num_vars, Rat(0));
    for (std::size_t j = 0; j < m; ++j) row[j] = 1;
    sys.add_eq(std::move(row), Rat(1));
  }
  for (std::size_t j = 0; j < delta0 + n; ++j) {
    RatVec row(sys.num_vars, Rat(0));
    row[j] = 1;
    sys.add_ge(std::move(row), Rat(0));
  }
  {
    RatVec row(sys.num_vars, Rat(0));
    for (std::size_t i = 0; i < n; ++i) row[delta0 + i] = 1;
    sys.add_gt(std::move(row), Rat(0));
  }
  FeasibilityResult res = solve_feasibility(sys, StrictStrategy::SlackMax);
  if (!res.feasible) {
    return fail_at({}, std::nullopt, std::move(sys), std::move(res.farkas));
  }
  ConditionVerdict verdict;
  DecompositionWitness cert;
  cert.social_weights.assign(res.witness.begin(), res.witness.begin() + m);
  cert.agent_weights.assign(res.witness.begin() + m,
                            res.witness.begin() + delta0);
  cert.strict_shifts.assign(res.witness.begin() + delta0,
                            res.witness.begin() + delta0 + n);
  cert.shift = res.witness[delta0 + n];
  verdict.certificates.push_back(std::move(cert));
  return verdict;
}

ConditionVerdict check_prop2_condition(const Profile& profile) {
  const std::size_t n = profile.num_agents();
  std::vector<std::size_t> counts;
  counts.reserve(n);
  for (const UtilitySet& set : profile.individuals) {
    counts.push_back(set.vertices.size());
  }
  std::vector<std::size_t> pair_radix;
  pair_radix.reserve(n);
  for (const std::size_t k : counts) pair_radix.push_back(k * k);

  ConditionVerdict verdict;
  verdict.status = ConditionStatus::Vacuous;
  for_each_selection(pair_radix, [&](const std::vector<std::size_t>& sel) {
    std::vector<UtilityVector> us;
    std::vector<UtilityVector> vs;
    std::vector<std::size_t> flat;
    us.reserve(n);
    vs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t ui = sel[i] / counts[i];
      const std::size_t vi = sel[i] % counts[i];
      us.push_back(profile.individuals[i].vertices[ui]);
      vs.push_back(profile.individuals[i].vertices[vi]);
      flat.push_back(ui);
      flat.push_back(vi);
    }
    if (!bi_independent(us, vs)) return false;
    LinearSystem sys = prop2_system(profile, us, vs);
    FeasibilityResult res = solve_feasibility(sys);
    if (!res.feasible) {
      verdict = fail_at(std::move(flat), std::nullopt, std::move(sys),
                        std::move(res.farkas));
      return true;
    }
    const std::size_t m = profile.social.vertices.size();
    DecompositionWitness cert;
    cert.vertex_choice = std::move(flat);
    cert.social_weights.assign(res.witness.begin(), res.witness.begin() + m);
    cert.agent_weights.assign(res.witness.begin() + m,
                              res.witness.begin() + m + n);
    cert.negative_weights.assign(res.witness.begin() + m + n,
                                 res.witness.begin() + m + 2 * n);
    cert.shift = res.witness[m + 2 * n];
    verdict.status = ConditionStatus::Holds;
    verdict.certificates.push_back(std::move(cert));
    return false;
  });
  return verdict;
}

bool prop2_combination_feasible(
    const Profile& profile,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (pairs.size() != profile.num_agents()) {
    throw std::invalid_argument(
        "prop2_combination_feasible: one vertex pair per agent required");
  }
  std::vector<UtilityVector> us;
  std::vector<UtilityVector> vs;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    us.push_back(profile.individuals[i].vertices.at(pairs[i].first));
    vs.push_back(profile.individuals[i].vertices.at(pairs[i].second));
  }
  return solve_feasibility(prop2_system(profile, us, vs)).feasible;
}

bool bi_independent(const std::vector<UtilityVector>& us,
                    const std::vector<UtilityVector>& vs) {
  if (us.size() != vs.size() || us.empty()) {
    throw std::invalid_argument("bi_independent: mismatched selection sizes");
  }
  std::vector<RatVec> rows;
  rows.reserve(2 * us.size() + 1);
  rows.insert(rows.end(), us.begin(), us.end());
  rows.insert(rows.end(), vs.begin(), vs.end());
  rows.push_back(RatVec(us.front().size(), Rat(1)));
  return rank(rows) == 2 * us.size() + 1;
}

UtilitySet aggregate_minkowski(const std::vector<UtilitySet>& individuals,
                               const RatVec& weights) {
  if (individuals.empty()) {
    throw ValidationError("aggregate_minkowski: no agents");
  }
  if (weights.size() != individuals.size()) {
    throw ValidationError("aggregate_minkowski: weight count != agent count");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) {
      throw ValidationError("aggregate_minkowski: nonpositive weight for agent " +
                            std::to_string(i));
    }
  }
  const std::size_t dim = individuals.front().vertices.front().size();
  std::vector<std::size_t> radix;
  radix.reserve(individuals.size());
  for (const UtilitySet& set : individuals) {
    radix.push_back(set.vertices.size());
  }
  std::vector<UtilityVector> sums;
  for_each_selection(radix, [&](const std::vector<std::size_t>& sel) {
    UtilityVector sum(dim, Rat(0));
    for (std::size_t i = 0; i < individuals.size(); ++i) {
      const UtilityVector& v = individuals[i].vertices[sel[i]];
      for (std::size_t z = 0; z < dim; ++z) sum[z] += weights[i] * v[z];
    }
    sums.push_back(std::move(sum));
    return false;
  });
  return validate_utility_set(std::move(sums));
}

UtilitySet aggregate_union_hull(const std::vector<UtilitySet>& individuals) {
  if (individuals.empty()) {
    throw ValidationError("aggregate_union_hull: no agents");
  }
  std::vector<UtilityVector> vertices;
  for (const UtilitySet& set : individuals) {
    vertices.insert(vertices.end(), set.vertices.begin(), set.vertices.end());
  }
  return validate_utility_set(std::move(vertices));
}

bool sets_equivalent(const UtilitySet& a, const UtilitySet& b) {
  if (a.vertices.front().size() != b.vertices.front().size()) {
    throw ValidationError("sets_equivalent: mismatched outcome spaces");
  }
  for (const UtilityVector& v : a.vertices) {
    if (!contains_equivalent(b, v)) return false;
  }
  for (const UtilityVector& v : b.vertices) {
    if (!contains_equivalent(a, v)) return false;
  }
  return true;
}

bool contains_equivalent(const UtilitySet& set, const UtilityVector& u) {
  if (is_constant_vec(u)) {
    throw ValidationError("contains_equivalent: constant utility vector");
  }
  if (u.size() != set.vertices.front().size()) {
    throw ValidationError("contains_equivalent: mismatched outcome spaces");
  }
  return cone_membership(u, set.vertices).has_value();
}

}  // namespace paretocheck
