#include <cstddef>
#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "paretocheck/lp.hpp"

using namespace paretocheck;
using testutil::rv;

namespace {

/// Random mixed system; homogeneous_only zeroes every right-hand side so
/// both strict strategies apply.
LinearSystem random_system(std::mt19937& rng, bool homogeneous_only) {
  std::uniform_int_distribution<std::size_t> var_count(1, 4);
  std::uniform_int_distribution<std::size_t> weak_count(0, 5);
  std::uniform_int_distribution<std::size_t> strict_count(0, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> kind(0, 2);

  LinearSystem system(var_count(rng));
  const std::size_t weak = weak_count(rng);
  const std::size_t strict = strict_count(rng);
  for (std::size_t r = 0; r < weak + strict; ++r) {
    RatVec row(system.num_vars);
    for (auto& c : row) {
      c = coeff(rng);
    }
    const Rat rhs = homogeneous_only ? Rat(0) : Rat(coeff(rng));
    if (r < weak) {
      switch (kind(rng)) {
        case 0:
          system.add_le(row, rhs);
          break;
        case 1:
          system.add_ge(row, rhs);
          break;
        default:
          system.add_eq(row, rhs);
          break;
      }
    } else if (kind(rng) == 0) {
      system.add_lt(row, rhs);
    } else {
      system.add_gt(row, rhs);
    }
  }
  return system;
}

LinearSystem rescale_rows(const LinearSystem& system, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 3);
  std::uniform_int_distribution<int> den(1, 2);
  LinearSystem scaled(system.num_vars);
  const auto scale = [&rng, &num, &den] {
    return Rat(num(rng), den(rng));
  };
  for (const WeakRow& row : system.weak) {
    const Rat s = scale();
    RatVec coeffs = row.coeffs;
    for (auto& c : coeffs) {
      c *= s;
    }
    scaled.weak.push_back(WeakRow{coeffs, row.cmp, row.rhs * s});
  }
  for (const StrictRow& row : system.strict) {
    const Rat s = scale();
    RatVec coeffs = row.coeffs;
    for (auto& c : coeffs) {
      c *= s;
    }
    scaled.strict.push_back(StrictRow{coeffs, row.cmp, row.rhs * s});
  }
  return scaled;
}

RatVec reconstruct(const std::vector<RatVec>& generators,
                   const std::vector<bool>& negated, const RatVec& weights,
                   const Rat& shift, std::size_t dims) {
  RatVec out(dims, shift);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const Rat sign = (!negated.empty() && negated[g]) ? Rat(-1) : Rat(1);
    for (std::size_t z = 0; z < dims; ++z) {
      out[z] += sign * weights[g] * generators[g][z];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("solve_feasibility decides the three reference systems") {
  LinearSystem contradictory(1);
  contradictory.add_ge(rv({1}), 0);
  contradictory.add_le(rv({1}), -1);
  const FeasibilityResult r1 = solve_feasibility(contradictory);
  CHECK_FALSE(r1.feasible);
  REQUIRE(r1.farkas.has_value());
  CHECK(farkas_refutes(contradictory, *r1.farkas));

  LinearSystem interior(2);
  interior.add_eq(rv({1, 1}), 1);
  interior.add_ge(rv({1, 0}), 0);
  interior.add_ge(rv({0, 1}), 0);
  interior.add_gt(rv({1, 0}), 0);
  const FeasibilityResult r2 = solve_feasibility(interior);
  REQUIRE(r2.feasible);
  CHECK(witness_satisfies(interior, r2.witness));
  CHECK(r2.witness[0] > 0);

  // Unique linear solution (2/3, -1/3) violates nonnegativity.
  LinearSystem forced(2);
  forced.add_eq(rv({2, 1}), 1);
  forced.add_eq(rv({1, 2}), 0);
  forced.add_ge(rv({1, 0}), 0);
  forced.add_ge(rv({0, 1}), 0);
  const FeasibilityResult r3 = solve_feasibility(forced);
  CHECK_FALSE(r3.feasible);
  REQUIRE(r3.farkas.has_value());
  CHECK(farkas_refutes(forced, *r3.farkas));
}

TEST_CASE("cone_membership decomposes or refuses exactly") {
  const std::vector<RatVec> gens = {rv({2, 1, 0}), rv({1, 2, 0})};

  // Unique decomposition: the generators and the ones vector are a basis.
  const auto hit = cone_membership(rv({3, 3, 0}), gens);
  REQUIRE(hit.has_value());
  CHECK(hit->weights == rv({1, 1}));
  CHECK(hit->shift == 0);

  const auto vertex = cone_membership(rv({2, 1, 0}), gens);
  REQUIRE(vertex.has_value());
  CHECK(vertex->weights == rv({1, 0}));
  CHECK(vertex->shift == 0);

  // Forced solution alpha = (2/3, -1/3) violates nonnegativity.
  CHECK_FALSE(cone_membership(rv({1, 0, 0}), gens).has_value());

  const std::vector<RatVec> axes = {rv({1, 0, 0}), rv({0, 1, 0})};
  const auto negated = cone_membership(rv({1, -1, 0}), axes, {false, true});
  REQUIRE(negated.has_value());
  CHECK(negated->weights == rv({1, 1}));
  CHECK(negated->shift == 0);

  CHECK_THROWS_AS(cone_membership(rv({1, 1, 1}), gens), std::invalid_argument);
}

TEST_CASE("polytope_membership finds convex weights or refuses") {
  const std::vector<RatVec> segment = {rv({2, 1, 0}), rv({1, 2, 0})};

  const auto mid = polytope_membership(testutil::rq({"3/2", "3/2", "0"}),
                                       segment);
  REQUIRE(mid.has_value());
  CHECK(*mid == testutil::rq({"1/2", "1/2"}));

  const auto vertex = polytope_membership(rv({2, 1, 0}), segment);
  REQUIRE(vertex.has_value());
  CHECK(*vertex == rv({1, 0}));

  // Every point of the segment has second coordinate >= 1.
  CHECK_FALSE(polytope_membership(rv({1, 0, 0}), segment).has_value());
}

TEST_CASE("rank over the rationals") {
  CHECK(rank({rv({1, 0, 0, 0, 0}), rv({0, 1, 0, 0, 0}), rv({0, 0, 1, 0, 0}),
              rv({1, 1, 1, 1, 1})}) == 4);
  CHECK(rank({rv({1, 0, 0}), rv({3, 1, 1}), rv({1, 1, 1})}) == 2);
  CHECK(rank({}) == 0);
}

TEST_CASE("random systems: witnesses substitute, Farkas refutes, rescaling"
          " preserves the verdict") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 300; ++trial) {
    const bool homogeneous = trial % 3 == 0;
    const LinearSystem system = random_system(rng, homogeneous);
    const FeasibilityResult result = solve_feasibility(system);
    if (result.feasible) {
      CHECK(witness_satisfies(system, result.witness));
    } else if (system.strict.empty()) {
      REQUIRE(result.farkas.has_value());
      CHECK(farkas_refutes(system, *result.farkas));
    }

    const LinearSystem scaled = rescale_rows(system, rng);
    CHECK(solve_feasibility(scaled).feasible == result.feasible);

    if (system.homogeneous()) {
      const FeasibilityResult normalized =
          solve_feasibility(system, StrictStrategy::NormalizeOne);
      CHECK(normalized.feasible == result.feasible);
      if (normalized.feasible) {
        CHECK(witness_satisfies(system, normalized.witness));
      }
    }
  }
}

TEST_CASE("cone_membership agrees with a brute-force weight grid") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-2, 2);
  const RatVec half = testutil::rq({"1/2"});
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<RatVec> gens;
    for (int g = 0; g < 2; ++g) {
      RatVec v(3);
      for (auto& c : v) {
        c = coord(rng);
      }
      gens.push_back(v);
    }

    // Grid of weights {0, 1/2, ..., 2} x shifts {-2, ..., 2}.
    for (int w0 = 0; w0 <= 4; ++w0) {
      for (int w1 = 0; w1 <= 4; ++w1) {
        for (int b = -4; b <= 4; ++b) {
          const RatVec weights = {Rat(w0) * half[0], Rat(w1) * half[0]};
          const Rat shift = Rat(b) * half[0];
          const RatVec target = reconstruct(gens, {}, weights, shift, 3);
          if (is_constant_vec(target)) {
            continue;
          }
          const auto found = cone_membership(target, gens);
          REQUIRE(found.has_value());
          CHECK(reconstruct(gens, {}, found->weights, found->shift, 3) ==
                target);
          for (const Rat& w : found->weights) {
            CHECK(w >= 0);
          }
        }
      }
    }
  }
}
