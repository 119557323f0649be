#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "paretocheck/io.hpp"
#include "paretocheck/reports.hpp"

namespace testutil {

using namespace paretocheck;

inline RatVec rv(std::initializer_list<long> values) {
  RatVec out;
  out.reserve(values.size());
  for (long v : values) {
    out.emplace_back(v);
  }
  return out;
}

inline RatVec rq(std::initializer_list<const char*> values) {
  RatVec out;
  out.reserve(values.size());
  for (const char* text : values) {
    out.push_back(parse_rational(text));
  }
  return out;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

inline ProfileDocument load_profile(const std::string& name) {
  return parse_profile_document(read_file(fixture_path(name)));
}

inline SetDocument load_set(const std::string& name) {
  return parse_set_document(read_file(fixture_path(name)));
}

inline AgentsDocument load_agents(const std::string& name) {
  return parse_agents_document(read_file(fixture_path(name)));
}

struct RandomProfileParams {
  std::size_t min_outcomes = 3;
  std::size_t max_outcomes = 4;
  std::size_t min_agents = 2;
  std::size_t max_agents = 3;
  std::size_t max_vertices = 3;
  int lo = 0;
  int hi = 5;
  bool require_no_conflict_pair = true;
};

inline OutcomeSpace space_of_size(std::size_t dims) {
  std::vector<std::string> labels;
  for (std::size_t z = 0; z < dims; ++z) {
    labels.push_back("z" + std::to_string(z));
  }
  return make_outcome_space(std::move(labels));
}

inline UtilityVector random_vertex(std::mt19937& rng, std::size_t dims,
                                   int lo, int hi) {
  std::uniform_int_distribution<int> coord(lo, hi);
  UtilityVector out(dims);
  for (std::size_t z = 0; z < dims; ++z) {
    out[z] = coord(rng);
  }
  return out;
}

/// Rejection-samples one valid utility set (nonconstant vertices, no
/// constant hull point) with 1..max_vertices integer vertices.
inline UtilitySet random_set(std::mt19937& rng, std::size_t dims,
                             std::size_t max_vertices, int lo, int hi) {
  std::uniform_int_distribution<std::size_t> count(1, max_vertices);
  for (;;) {
    std::vector<UtilityVector> vertices;
    const std::size_t wanted = count(rng);
    for (std::size_t k = 0; k < wanted; ++k) {
      vertices.push_back(random_vertex(rng, dims, lo, hi));
    }
    try {
      return validate_utility_set(std::move(vertices));
    } catch (const ValidationError&) {
      continue;
    }
  }
}

/// Rejection-samples a full profile; with require_no_conflict_pair the
/// individual sets are redrawn until a unanimous strict outcome pair
/// exists.  The social set is drawn independently.
inline Profile random_profile(std::mt19937& rng,
                              const RandomProfileParams& params) {
  std::uniform_int_distribution<std::size_t> outcome_count(
      params.min_outcomes, params.max_outcomes);
  std::uniform_int_distribution<std::size_t> agent_count(params.min_agents,
                                                         params.max_agents);
  const std::size_t dims = outcome_count(rng);
  const std::size_t agents = agent_count(rng);
  const OutcomeSpace space = space_of_size(dims);
  for (;;) {
    std::vector<UtilitySet> individuals;
    for (std::size_t i = 0; i < agents; ++i) {
      individuals.push_back(
          random_set(rng, dims, params.max_vertices, params.lo, params.hi));
    }
    UtilitySet social =
        random_set(rng, dims, params.max_vertices, params.lo, params.hi);
    Profile profile =
        make_profile(space, std::move(individuals), std::move(social));
    if (params.require_no_conflict_pair &&
        !no_conflict_pair(profile).has_value()) {
      continue;
    }
    return profile;
  }
}

inline ProfileDocument wrap_document(Profile profile) {
  ProfileDocument doc;
  doc.profile = std::move(profile);
  for (std::size_t i = 0; i < doc.profile.num_agents(); ++i) {
    doc.agent_ids.push_back("agent " + std::to_string(i + 1));
  }
  return doc;
}

}  // namespace testutil
