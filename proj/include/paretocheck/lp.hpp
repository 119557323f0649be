#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "paretocheck/rational.hpp"

namespace paretocheck {

enum class Cmp { LessEq, Eq, GreaterEq };
enum class StrictCmp { Less, Greater };

struct WeakRow {
  RatVec coeffs;
  Cmp cmp;
  Rat rhs;
};

struct StrictRow {
  RatVec coeffs;
  StrictCmp cmp;
  Rat rhs;
};

/// Variables are free; every sign restriction is an explicit row.
struct LinearSystem {
  std::size_t num_vars = 0;

  std::vector<WeakRow> weak;
  std::vector<StrictRow> strict;

  explicit LinearSystem(std::size_t vars = 0) : num_vars(vars) {}

  void add_le(RatVec coeffs, Rat rhs);
  void add_ge(RatVec coeffs, Rat rhs);
  void add_eq(RatVec coeffs, Rat rhs);
  void add_gt(RatVec coeffs, Rat rhs);
  void add_lt(RatVec coeffs, Rat rhs);

  /// All right-hand sides zero; the feasible set is then a cone, which is
  /// what licenses the NormalizeOne strategy.
  bool homogeneous() const;
};

/// How strict rows are decided.
///  SlackMax: add t with 0 <= t <= 1, tighten each strict row by t,
///            maximize t; feasible iff the optimum has t > 0.
///  NormalizeOne: rewrite c.x > 0 as c.x >= 1 (c.x < 0 as c.x <= -1);
///            valid only for homogeneous systems, by scale invariance.
enum class StrictStrategy { SlackMax, NormalizeOne };

/// Refutation of a weak system: one multiplier per weak row, >= 0 on
/// LessEq rows, <= 0 on GreaterEq rows, free on Eq rows, such that the
/// combined coefficients vanish and the combined right-hand side is
/// negative.  Emitted only for systems without strict rows.
struct FarkasCertificate {
  std::vector<Rat> multipliers;
};

struct FeasibilityResult {
  bool feasible = false;
  RatVec witness;
  std::optional<FarkasCertificate> farkas;
};

FeasibilityResult solve_feasibility(
    const LinearSystem& system,
    StrictStrategy strategy = StrictStrategy::SlackMax);

/// Exact substitution check of every row.
bool witness_satisfies(const LinearSystem& system, const RatVec& witness);

/// Exact check that the certificate refutes the weak rows of the system.
bool farkas_refutes(const LinearSystem& system,
                    const FarkasCertificate& certificate);

struct ConeDecomposition {
  RatVec weights;  // aligned with generators, componentwise >= 0
  Rat shift;       // coefficient of the all-ones vector
};

/// Searches for target = sum_g weights[g] * (+-generators[g]) + shift * 1,
/// weights >= 0, the sign taken negative exactly on flagged generators.
/// weights != 0 needs no extra constraint when the target is nonconstant:
/// all-zero weights would make the target a constant shift * 1.
std::optional<ConeDecomposition> cone_membership(
    const RatVec& target, const std::vector<RatVec>& generators,
    const std::vector<bool>& negated = {});

/// Convex weights expressing point over the vertex list, or absent.
std::optional<RatVec> polytope_membership(const RatVec& point,
                                          const std::vector<RatVec>& vertices);

/// Rank over the rationals, by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
std::size_t rank(const std::vector<RatVec>& vectors);

}  // namespace paretocheck
