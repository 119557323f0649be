#include "paretocheck/io.hpp"

#include <fstream>
#include <sstream>

namespace paretocheck {

namespace {

Json parse_json(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw ValidationError("document: not valid JSON");
  }
  return doc;
}

const Json& require(const Json& doc, const char* key,
                    const std::string& where) {
  const auto it = doc.find(key);
  if (!doc.is_object() || it == doc.end()) {
    throw ValidationError(where + ": missing \"" + key + "\"");
  }
  return *it;
}

OutcomeSpace outcomes_from_json(const Json& value) {
  if (!value.is_array()) {
    throw ValidationError("outcomes: expected an array of labels");
  }
  std::vector<std::string> labels;
  for (const Json& label : value) {
    if (!label.is_string()) {
      throw ValidationError("outcomes: labels must be strings");
    }
    labels.push_back(label.get<std::string>());
  }
  return make_outcome_space(std::move(labels));
}

std::vector<UtilityVector> vertices_from_json(const Json& value,
                                              const OutcomeSpace& space,
                                              const std::string& who) {
  if (!value.is_array() || value.empty()) {
    throw ValidationError(who + ": expected a nonempty array of vertices");
  }
  std::vector<UtilityVector> vertices;
  for (std::size_t k = 0; k < value.size(); ++k) {
    const std::string where = who + " vertex " + std::to_string(k);
    const RatVec v = vector_from_json(value[k], where);
    if (v.size() != space.size()) {
      throw ValidationError(where + ": has " + std::to_string(v.size()) +
                            " coordinates, expected " +
                            std::to_string(space.size()));
    }
    vertices.push_back(v);
  }
  return vertices;
}

UtilitySet set_from_json(const Json& value, const OutcomeSpace& space,
                         const std::string& who) {
  try {
    return validate_utility_set(vertices_from_json(value, space, who));
  } catch (const ValidationError& err) {
    const std::string what = err.what();
    if (what.rfind("utility set:", 0) == 0) {
      throw ValidationError(who + what.substr(std::string("utility set").size()));
    }
    throw;
  }
}

Json set_to_json(const UtilitySet& set) {
  Json vertices = Json::array();
  for (const UtilityVector& v : set.vertices) {
    vertices.push_back(vector_to_json(v));
  }
  return vertices;
}

}  // namespace

Rat rational_from_json(const Json& value, const std::string& where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) {
      return Rat(value.get<std::uint64_t>());
    }
    return Rat(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw ValidationError(where + ": " + err.what());
    }
  }
  throw ValidationError(where +
                        ": rationals must be integers or \"p/q\" strings");
}

Json rational_to_json(const Rat& value) {
  if (denominator(value) == 1) {
    const Int num = numerator(value);
    // Stay well inside the range JSON consumers parse exactly.
    if (num >= std::numeric_limits<std::int32_t>::min() &&
        num <= std::numeric_limits<std::int32_t>::max()) {
      return Json(num.convert_to<std::int64_t>());
    }
  }
  return Json(format_rational(value));
}

Json vector_to_json(const RatVec& values) {
  Json out = Json::array();
  for (const Rat& x : values) out.push_back(rational_to_json(x));
  return out;
}

RatVec vector_from_json(const Json& value, const std::string& where) {
  if (!value.is_array()) {
    throw ValidationError(where + ": expected an array of rationals");
  }
  RatVec out;
  out.reserve(value.size());
  for (std::size_t z = 0; z < value.size(); ++z) {
    out.push_back(
        rational_from_json(value[z], where + " coordinate " + std::to_string(z)));
  }
  return out;
}

ProfileDocument parse_profile_document(const std::string& text) {
  const Json doc = parse_json(text);
  OutcomeSpace space = outcomes_from_json(require(doc, "outcomes", "profile"));

  const Json& agents = require(doc, "agents", "profile");
  if (!agents.is_array()) {
    throw ValidationError("profile: \"agents\" must be an array");
  }
  std::vector<UtilitySet> individuals;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const Json& agent = agents[i];
    std::string id = "agent " + std::to_string(i);
    if (agent.is_object() && agent.contains("id") && agent["id"].is_string()) {
      id = agent["id"].get<std::string>();
    }
    individuals.push_back(
        set_from_json(require(agent, "vertices", id), space, id));
    ids.push_back(std::move(id));
  }

  const Json& social = require(doc, "social", "profile");
  UtilitySet social_set =
      set_from_json(require(social, "vertices", "social"), space, "social");

  return ProfileDocument{
      make_profile(std::move(space), std::move(individuals),
                   std::move(social_set)),
      std::move(ids)};
}

std::string emit_profile_document(const ProfileDocument& doc) {
  Json out;
  out["outcomes"] = doc.profile.space.labels;
  Json agents = Json::array();
  for (std::size_t i = 0; i < doc.profile.individuals.size(); ++i) {
    Json agent;
    agent["id"] = i < doc.agent_ids.size() ? doc.agent_ids[i]
                                           : "agent " + std::to_string(i);
    agent["vertices"] = set_to_json(doc.profile.individuals[i]);
    agents.push_back(std::move(agent));
  }
  out["agents"] = std::move(agents);
  out["social"]["vertices"] = set_to_json(doc.profile.social);
  return out.dump(2) + "\n";
}

SetDocument parse_set_document(const std::string& text) {
  const Json doc = parse_json(text);
  OutcomeSpace space = outcomes_from_json(require(doc, "outcomes", "set"));
  UtilitySet set =
      set_from_json(require(doc, "vertices", "set"), space, "set");
  return SetDocument{std::move(space), std::move(set)};
}

std::string emit_set_document(const SetDocument& doc) {
  Json out;
  out["outcomes"] = doc.space.labels;
  out["vertices"] = set_to_json(doc.set);
  return out.dump(2) + "\n";
}

AgentsDocument parse_agents_document(const std::string& text) {
  const Json doc = parse_json(text);
  OutcomeSpace space = outcomes_from_json(require(doc, "outcomes", "agents"));
  const Json& agents = require(doc, "agents", "agents");
  if (!agents.is_array() || agents.empty()) {
    throw ValidationError("agents: expected a nonempty array");
  }
  std::vector<UtilitySet> sets;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const Json& agent = agents[i];
    std::string id = "agent " + std::to_string(i);
    if (agent.is_object() && agent.contains("id") && agent["id"].is_string()) {
      id = agent["id"].get<std::string>();
    }
    sets.push_back(set_from_json(require(agent, "vertices", id), space, id));
    ids.push_back(std::move(id));
  }
  return AgentsDocument{std::move(space), std::move(sets), std::move(ids)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace paretocheck
