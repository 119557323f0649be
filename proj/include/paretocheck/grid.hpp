#pragma once

#include <vector>

#include "paretocheck/axioms.hpp"

namespace paretocheck {

struct GridSpec {
  std::size_t denominator = 5;  // D >= 1
};

/// All lotteries whose probabilities are multiples of 1/D, in ascending
/// lexicographic order of the probability vector; there are
/// C(D + |Z| - 1, |Z| - 1) of them.
std::vector<Lottery> enumerate_lotteries(const OutcomeSpace& space,
                                         const GridSpec& spec);

struct GridViolation {
  Lottery l;
  Lottery lp;
  std::vector<Relation> individual_relations;
  Relation social_relation;
};

/// Extensional scan of every ordered pair of distinct grid lotteries
/// against the axiom's implication, via the same relation predicate the
/// certificate verifier uses.  Sound but incomplete: an empty result
/// proves nothing beyond the grid.
std::vector<GridViolation> grid_check(const Profile& profile, Axiom axiom,
                                      const GridSpec& spec);

}  // namespace paretocheck
