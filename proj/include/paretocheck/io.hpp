#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "paretocheck/model.hpp"

namespace paretocheck {

using Json = nlohmann::json;

/// Accepts a JSON integer or a "p/q" / "p" string; anything else (floats
/// included: exactness is the contract) raises ValidationError naming
/// `where`.
Rat rational_from_json(const Json& value, const std::string& where);

/// Integers become JSON numbers when they fit; everything else "p/q".
Json rational_to_json(const Rat& value);

Json vector_to_json(const RatVec& values);
RatVec vector_from_json(const Json& value, const std::string& where);

/// On-disk profile: {"outcomes": [...], "agents": [{"id", "vertices"}...],
/// "social": {"vertices": [...]}}.  Agent ids are carried for round-trips.
struct ProfileDocument {
  Profile profile;
  std::vector<std::string> agent_ids;
};

ProfileDocument parse_profile_document(const std::string& text);
std::string emit_profile_document(const ProfileDocument& doc);

/// {"outcomes": [...], "vertices": [...]}: one utility set.
struct SetDocument {
  OutcomeSpace space;
  UtilitySet set;
};

SetDocument parse_set_document(const std::string& text);
std::string emit_set_document(const SetDocument& doc);

/// {"outcomes": [...], "agents": [...]}: a profile without a social set.
struct AgentsDocument {
  OutcomeSpace space;
  std::vector<UtilitySet> agents;
  std::vector<std::string> agent_ids;
};

AgentsDocument parse_agents_document(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace paretocheck
