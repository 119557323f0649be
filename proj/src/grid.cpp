#include "paretocheck/grid.hpp"

#include <stdexcept>

namespace paretocheck {

namespace {

void compositions(std::size_t pos, std::size_t remaining, RatVec& current,
                  std::size_t denominator, std::vector<Lottery>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = Rat(remaining) / Rat(denominator);
    out.push_back(Lottery{current});
    return;
  }
  for (std::size_t k = 0; k <= remaining; ++k) {
    current[pos] = Rat(k) / Rat(denominator);
    compositions(pos + 1, remaining - k, current, denominator, out);
  }
}

}  // namespace

std::vector<Lottery> enumerate_lotteries(const OutcomeSpace& space,
                                         const GridSpec& spec) {
  if (spec.denominator == 0) {
    throw std::invalid_argument("grid: denominator must be >= 1");
  }
  std::vector<Lottery> out;
  RatVec current(space.size(), Rat(0));
  compositions(0, spec.denominator, current, spec.denominator, out);
  return out;
}

std::vector<GridViolation> grid_check(const Profile& profile, Axiom axiom,
                                      const GridSpec& spec) {
  const std::vector<Lottery> grid = enumerate_lotteries(profile.space, spec);
  const std::size_t n = profile.num_agents();

  std::vector<const UtilitySet*> sets;
  sets.reserve(n + 1);
  for (const UtilitySet& set : profile.individuals) sets.push_back(&set);
  sets.push_back(&profile.social);

  // expectations[s][k][a] = E over lottery a at vertex k of set s.
  std::vector<std::vector<std::vector<Rat>>> expectations(sets.size());
  for (std::size_t s = 0; s < sets.size(); ++s) {
    expectations[s].resize(sets[s]->vertices.size());
    for (std::size_t k = 0; k < sets[s]->vertices.size(); ++k) {
      expectations[s][k].reserve(grid.size());
      for (const Lottery& l : grid) {
        expectations[s][k].push_back(dot(l.probs, sets[s]->vertices[k]));
      }
    }
  }

  const auto relation_at = [&](std::size_t s, std::size_t a, std::size_t b) {
    bool any_pos = false;
    bool any_neg = false;
    for (std::size_t k = 0; k < expectations[s].size(); ++k) {
      const int cmp = expectations[s][k][a].compare(expectations[s][k][b]);
      if (cmp > 0) any_pos = true;
      if (cmp < 0) any_neg = true;
      if (any_pos && any_neg) return Relation::Incomparable;
    }
    if (any_pos) return Relation::StrictlyPreferred;
    if (any_neg) return Relation::StrictlyDispreferred;
    return Relation::Indifferent;
  };

  std::vector<GridViolation> out;
  std::vector<Relation> individual(n);
  for (std::size_t a = 0; a < grid.size(); ++a) {
    for (std::size_t b = 0; b < grid.size(); ++b) {
      if (a == b) continue;
      for (std::size_t i = 0; i < n; ++i) individual[i] = relation_at(i, a, b);
      const Relation social = relation_at(n, a, b);
      if (relations_violate(axiom, individual, social)) {
        out.push_back({grid[a], grid[b], individual, social});
      }
    }
  }
  return out;
}

}  // namespace paretocheck
