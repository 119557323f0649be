#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paretocheck/relations.hpp"

namespace paretocheck {

enum class Axiom {
  Pareto,               // all i weakly prefer  =>  society weakly prefers
  ParetoStar,           // no i weakly prefers  =>  society does not either
  ParetoIndifference,   // all i indifferent    =>  society indifferent
  ParetoIncomparability,// all i incomparable   =>  society incomparable
  NonReversal           // all i strictly prefer => society does not weakly
                        //                          prefer the reverse
};

inline constexpr Axiom kAllAxioms[] = {
    Axiom::Pareto, Axiom::ParetoStar, Axiom::ParetoIndifference,
    Axiom::ParetoIncomparability, Axiom::NonReversal};

std::string axiom_name(Axiom axiom);
std::optional<Axiom> axiom_from_name(std::string_view name);

struct AxiomWitness {
  Lottery l;
  Lottery lp;
  std::vector<Relation> individual_relations;  // compare(l, lp, set_i)
  Relation social_relation;
};

struct AxiomVerdict {
  bool holds = false;
  std::optional<AxiomWitness> witness;  // set when violated; re-verifies
};

/// Searches for a violating direction d (a difference of two lotteries) by
/// enumerating per-agent vertex selections and solving one homogeneous
/// feasibility system per selection; existential vertex quantifiers are
/// discharged at vertices, universal ones add one row per vertex.
AxiomVerdict check_axiom(const Profile& profile, Axiom axiom);

/// (uniform + eps d, uniform) with eps = 1/(|Z| max|d_z|): valid lotteries
/// whose difference is a positive multiple of d, so every sign conclusion
/// about d transfers.  Requires d nonzero with mean zero.
std::pair<Lottery, Lottery> direction_to_lottery_pair(const RatVec& d);

/// Recomputes every relation at (l, l') via compare and evaluates the
/// axiom's implication on this single ordered pair; true iff violated.
bool verify_certificate(const Profile& profile, Axiom axiom, const Lottery& l,
                        const Lottery& lp);

/// The shared violation predicate: premise on the individual relations
/// holds at (l, l') while the social conclusion fails.
bool relations_violate(Axiom axiom, const std::vector<Relation>& individual,
                       Relation social);

}  // namespace paretocheck
