#include <limits>

#include <json.hpp>

#include "topictrack/render.hpp"

namespace topictrack {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const Tet& tet) {
  if (!tet.classified()) throw std::logic_error("to_json requires a classified TET");

  ordered_json doc;
  doc["params"] = {
      {"min_tes", tet.params.min_tes},
      {"min_reborn", tet.params.min_reborn},
      {"min_dead", tet.params.min_dead},
      {"threshold_mode", std::string(to_string(tet.params.threshold_mode))},
  };
  doc["latest_year"] = tet.latest_year;

  ordered_json nodes = ordered_json::array();
  for (const TopicRecord& t : tet.profile.topics()) {
    const NodeStates& s = tet.states_of(t.index);
    ordered_json node;
    node["id"] = t.id;
    node["index"] = t.index;
    node["label"] = t.label ? ordered_json(*t.label) : ordered_json(nullptr);
    node["year"] = t.year;
    node["weight"] = t.weight;
    node["words"] = t.words;
    node["emerging_state"] = std::string(to_string(s.emerging));
    node["evolving_state"] = std::string(to_string(s.evolving));
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);

  ordered_json edges = ordered_json::array();
  for (const TetEdge& e : tet.edges)
    edges.push_back({{"from_index", e.from_index}, {"to_index", e.to_index}, {"tes", e.tes}});
  doc["edges"] = std::move(edges);

  return doc.dump(2) + "\n";
}

namespace {

const nlohmann::json& field(const nlohmann::json& obj, const char* key, std::string_view where) {
  if (!obj.is_object()) throw TetFormatError(std::string(where) + " must be an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw TetFormatError(std::string(where) + " lacks '" + key + "'");
  return *it;
}

double number(const nlohmann::json& v, std::string_view what) {
  if (!v.is_number()) throw TetFormatError(std::string(what) + " must be a number");
  return v.get<double>();
}

int integer(const nlohmann::json& v, std::string_view what) {
  if (!v.is_number_integer()) throw TetFormatError(std::string(what) + " must be an integer");
  const auto value = v.get<long long>();
  if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max())
    throw TetFormatError(std::string(what) + " is out of range");
  return static_cast<int>(value);
}

std::string text(const nlohmann::json& v, std::string_view what) {
  if (!v.is_string()) throw TetFormatError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

}  // namespace

Tet from_json(std::string_view input) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    throw TetFormatError(std::string("invalid JSON: ") + e.what());
  }

  Tet tet;
  const auto& params = field(doc, "params", "document");
  tet.params.min_tes = number(field(params, "min_tes", "params"), "params.min_tes");
  tet.params.min_reborn = integer(field(params, "min_reborn", "params"), "params.min_reborn");
  tet.params.min_dead = integer(field(params, "min_dead", "params"), "params.min_dead");
  const auto mode = parse_threshold_mode(text(field(params, "threshold_mode", "params"), "params.threshold_mode"));
  if (!mode) throw TetFormatError("params.threshold_mode must be 'inclusive' or 'exclusive'");
  tet.params.threshold_mode = *mode;
  try {
    tet.params.validate();
  } catch (const std::invalid_argument& e) {
    throw TetFormatError(e.what());
  }
  tet.latest_year = integer(field(doc, "latest_year", "document"), "latest_year");

  const auto& nodes = field(doc, "nodes", "document");
  if (!nodes.is_array()) throw TetFormatError("nodes must be an array");
  std::vector<TopicRecord> topics;
  std::vector<std::pair<TopicIndex, NodeStates>> states;
  for (const auto& node : nodes) {
    TopicRecord t;
    t.id = text(field(node, "id", "node"), "node.id");
    t.index = integer(field(node, "index", "node"), "node.index");
    const auto& label = field(node, "label", "node");
    if (!label.is_null()) t.label = text(label, "node.label");
    t.year = integer(field(node, "year", "node"), "node.year");
    t.weight = number(field(node, "weight", "node"), "node.weight");
    const auto& words = field(node, "words", "node");
    if (!words.is_array()) throw TetFormatError("node.words must be an array");
    for (const auto& w : words) t.words.push_back(text(w, "node.words[]"));
    const auto emerging = parse_emerging_state(text(field(node, "emerging_state", "node"), "node.emerging_state"));
    const auto evolving = parse_evolving_state(text(field(node, "evolving_state", "node"), "node.evolving_state"));
    if (!emerging || !evolving) throw TetFormatError("unknown state on node '" + t.id + "'");
    states.emplace_back(t.index, NodeStates{*emerging, *evolving});
    topics.push_back(std::move(t));
  }
  try {
    tet.profile = TemporalTopicProfile(std::move(topics));
  } catch (const std::invalid_argument& e) {
    throw TetFormatError(std::string("invalid nodes: ") + e.what());
  }
  tet.states.resize(tet.profile.size());
  for (const auto& [index, s] : states) tet.states[tet.profile.position_of(index)] = s;

  const auto& edges = field(doc, "edges", "document");
  if (!edges.is_array()) throw TetFormatError("edges must be an array");
  for (const auto& edge : edges) {
    TetEdge e;
    e.from_index = integer(field(edge, "from_index", "edge"), "edge.from_index");
    e.to_index = integer(field(edge, "to_index", "edge"), "edge.to_index");
    e.tes = number(field(edge, "tes", "edge"), "edge.tes");
    tet.edges.push_back(e);
  }

  if (auto violation = find_invariant_violation(tet)) throw TetFormatError("inconsistent TET: " + *violation);
  return tet;
}

}  // namespace topictrack
