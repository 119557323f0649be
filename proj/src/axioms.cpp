#include "paretocheck/axioms.hpp"

#include <algorithm>
#include <stdexcept>

#include "paretocheck/enumerate.hpp"
#include "paretocheck/lp.hpp"

namespace paretocheck {

std::string axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Pareto:
      return "pareto";
    case Axiom::ParetoStar:
      return "pareto-star";
    case Axiom::ParetoIndifference:
      return "pareto-indifference";
    case Axiom::ParetoIncomparability:
      return "pareto-incomparability";
    case Axiom::NonReversal:
      return "non-reversal";
  }
  return "";
}

std::optional<Axiom> axiom_from_name(std::string_view name) {
  for (Axiom axiom : kAllAxioms) {
    if (axiom_name(axiom) == name) return axiom;
  }
  return std::nullopt;
}

bool relations_violate(Axiom axiom, const std::vector<Relation>& individual,
                       Relation social) {
  const auto all = [&](auto pred) {
    return std::all_of(individual.begin(), individual.end(), pred);
  };
  switch (axiom) {
    case Axiom::Pareto:
      return all([](Relation r) { return weakly_prefers(r); }) &&
             !weakly_prefers(social);
    case Axiom::ParetoStar:
      return all([](Relation r) { return !weakly_prefers(r); }) &&
             weakly_prefers(social);
    case Axiom::ParetoIndifference:
      return all([](Relation r) { return r == Relation::Indifferent; }) &&
             social != Relation::Indifferent;
    case Axiom::ParetoIncomparability:
      return all([](Relation r) { return r == Relation::Incomparable; }) &&
             social != Relation::Incomparable;
    case Axiom::NonReversal:
      // "no i strictly prefers the reverse" premise is all-strict here;
      // the violated conclusion is social weak preference for the reverse.
      return all([](Relation r) { return r == Relation::StrictlyPreferred; }) &&
             (social == Relation::StrictlyDispreferred ||
              social == Relation::Indifferent);
  }
  return false;
}

std::pair<Lottery, Lottery> direction_to_lottery_pair(const RatVec& d) {
  if (d.empty() || vec_sum(d) != 0) {
    throw std::invalid_argument(
        "direction_to_lottery_pair: direction must have mean zero");
  }
  Rat maxabs = 0;
  for (const Rat& x : d) {
    const Rat a = abs(x);
    if (a > maxabs) maxabs = a;
  }
  if (maxabs == 0) {
    throw std::invalid_argument(
        "direction_to_lottery_pair: direction must be nonzero");
  }
  const int size = static_cast<int>(d.size());
  const Rat eps = Rat(1) / (size * maxabs);
  RatVec shifted(d.size());
  for (std::size_t z = 0; z < d.size(); ++z) {
    shifted[z] = Rat(1, size) + eps * d[z];
  }
  return {make_lottery(std::move(shifted)),
          make_lottery(RatVec(d.size(), Rat(1, size)))};
}

bool verify_certificate(const Profile& profile, Axiom axiom, const Lottery& l,
                        const Lottery& lp) {
  std::vector<Relation> individual;
  individual.reserve(profile.individuals.size());
  for (const UtilitySet& set : profile.individuals) {
    individual.push_back(compare(l, lp, set));
  }
  return relations_violate(axiom, individual, compare(l, lp, profile.social));
}

AxiomVerdict check_axiom(const Profile& profile, Axiom axiom) {
  const std::size_t dim = profile.space.size();
  const auto base = [&] {
    LinearSystem sys(dim);
    sys.add_eq(RatVec(dim, Rat(1)), Rat(0));  // d is a lottery difference
    return sys;
  };
  const auto solve = [](const LinearSystem& sys) {
    return solve_feasibility(sys, StrictStrategy::NormalizeOne);
  };

  std::vector<std::size_t> radix;
  radix.reserve(profile.individuals.size());
  for (const UtilitySet& set : profile.individuals) {
    radix.push_back(set.vertices.size());
  }

  std::optional<RatVec> direction;
  // The searched d is l - l' except for ParetoStar, where the premise
  // concerns the reversed pair and d = l' - l.
  bool reversed = false;

  switch (axiom) {
    case Axiom::Pareto:
      for (const UtilityVector& w : profile.social.vertices) {
        LinearSystem sys = base();
        for (const UtilitySet& set : profile.individuals) {
          for (const UtilityVector& v : set.vertices) sys.add_ge(v, Rat(0));
        }
        sys.add_lt(w, Rat(0));
        if (const auto res = solve(sys); res.feasible) {
          direction = res.witness;
          break;
        }
      }
      break;

    case Axiom::ParetoStar:
      reversed = true;
      for_each_selection(radix, [&](const std::vector<std::size_t>& sel) {
        LinearSystem sys = base();
        for (std::size_t i = 0; i < profile.individuals.size(); ++i) {
          sys.add_gt(profile.individuals[i].vertices[sel[i]], Rat(0));
        }
        for (const UtilityVector& w : profile.social.vertices) {
          sys.add_le(w, Rat(0));
        }
        if (const auto res = solve(sys); res.feasible) {
          direction = res.witness;
          return true;
        }
        return false;
      });
      break;

    case Axiom::ParetoIndifference:
      for (const UtilityVector& w : profile.social.vertices) {
        LinearSystem sys = base();
        for (const UtilitySet& set : profile.individuals) {
          for (const UtilityVector& v : set.vertices) sys.add_eq(v, Rat(0));
        }
        sys.add_gt(w, Rat(0));
        if (const auto res = solve(sys); res.feasible) {
          direction = res.witness;
          break;
        }
      }
      break;

    case Axiom::ParetoIncomparability: {
      // One ordered vertex pair per agent makes that agent incomparable;
      // the social set then must not be: all its signs weakly agree.
      std::vector<std::size_t> pair_radix;
      pair_radix.reserve(radix.size());
      for (const std::size_t k : radix) pair_radix.push_back(k * k);
      for_each_selection(pair_radix, [&](const std::vector<std::size_t>& sel) {
        for (std::size_t i = 0; i < sel.size(); ++i) {
          if (sel[i] / radix[i] == sel[i] % radix[i]) return false;
        }
        for (const int social_sign : {+1, -1}) {
          LinearSystem sys = base();
          for (std::size_t i = 0; i < profile.individuals.size(); ++i) {
            const UtilitySet& set = profile.individuals[i];
            sys.add_gt(set.vertices[sel[i] / radix[i]], Rat(0));
            sys.add_lt(set.vertices[sel[i] % radix[i]], Rat(0));
          }
          for (const UtilityVector& w : profile.social.vertices) {
            if (social_sign > 0) {
              sys.add_ge(w, Rat(0));
            } else {
              sys.add_le(w, Rat(0));
            }
          }
          if (const auto res = solve(sys); res.feasible) {
            direction = res.witness;
            return true;
          }
        }
        return false;
      });
      break;
    }

    case Axiom::NonReversal:
      for_each_selection(radix, [&](const std::vector<std::size_t>& sel) {
        LinearSystem sys = base();
        for (const UtilitySet& set : profile.individuals) {
          for (const UtilityVector& v : set.vertices) sys.add_ge(v, Rat(0));
        }
        for (std::size_t i = 0; i < profile.individuals.size(); ++i) {
          sys.add_gt(profile.individuals[i].vertices[sel[i]], Rat(0));
        }
        for (const UtilityVector& w : profile.social.vertices) {
          sys.add_le(w, Rat(0));
        }
        if (const auto res = solve(sys); res.feasible) {
          direction = res.witness;
          return true;
        }
        return false;
      });
      break;
  }

  if (!direction) return {true, std::nullopt};

  auto [l, lp] = direction_to_lottery_pair(*direction);
  if (reversed) std::swap(l, lp);
  AxiomWitness witness{std::move(l), std::move(lp), {}, Relation::Indifferent};
  witness.individual_relations.reserve(profile.individuals.size());
  for (const UtilitySet& set : profile.individuals) {
    witness.individual_relations.push_back(
        compare(witness.l, witness.lp, set));
  }
  witness.social_relation = compare(witness.l, witness.lp, profile.social);
  if (!relations_violate(axiom, witness.individual_relations,
                         witness.social_relation)) {
    throw std::logic_error("check_axiom: witness failed re-verification");
  }
  return {false, std::move(witness)};
}

}  // namespace paretocheck
