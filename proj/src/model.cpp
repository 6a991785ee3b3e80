#include "topictrack/model.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

namespace topictrack {

TemporalTopicProfile::TemporalTopicProfile(std::vector<TopicRecord> topics) : topics_(std::move(topics)) {
  if (topics_.empty()) throw std::invalid_argument("profile must contain at least one topic");

  std::stable_sort(topics_.begin(), topics_.end(), [](const TopicRecord& a, const TopicRecord& b) {
    return a.year != b.year ? a.year < b.year : a.index < b.index;
  });

  const std::size_t n = topics_.size();
  position_of_index_.assign(n, n);
  std::unordered_set<std::string_view> ids;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const TopicRecord& t = topics_[pos];
    if (t.index < 0 || static_cast<std::size_t>(t.index) >= n)
      throw std::invalid_argument("topic index " + std::to_string(t.index) + " outside 0..N-1");
    if (position_of_index_[t.index] != n)
      throw std::invalid_argument("duplicate topic index " + std::to_string(t.index));
    position_of_index_[t.index] = pos;
    if (t.id.empty()) throw std::invalid_argument("topic id must be non-empty");
    if (!ids.insert(t.id).second) throw std::invalid_argument("duplicate topic id '" + t.id + "'");
    if (!(t.weight >= 0.0 && t.weight <= 1.0))
      throw std::invalid_argument("weight of topic '" + t.id + "' outside [0,1]");
    if (t.words.empty()) throw std::invalid_argument("topic '" + t.id + "' has no words");
    if (distinct_years_.empty() || distinct_years_.back() != t.year) distinct_years_.push_back(t.year);
  }
}

std::size_t TemporalTopicProfile::position_of(TopicIndex index) const {
  if (!contains(index)) throw std::out_of_range("unknown topic index " + std::to_string(index));
  return position_of_index_[static_cast<std::size_t>(index)];
}

void EvolutionParams::validate() const {
  if (!(min_tes >= 0.0 && min_tes <= 1.0)) throw std::invalid_argument("min_tes must lie in [0,1]");
  if (min_reborn < 0) throw std::invalid_argument("min_reborn must be non-negative");
  if (min_dead < 0) throw std::invalid_argument("min_dead must be non-negative");
}

namespace {

constexpr std::array<std::string_view, 2> kThresholdNames{"inclusive", "exclusive"};
constexpr std::array<std::string_view, 4> kEmergingNames{"born", "fused", "reborn", "flourishing"};
constexpr std::array<std::string_view, 3> kEvolvingNames{"split", "dead", "flourishing"};

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::string_view, N>& names, std::string_view text) {
  for (std::size_t i = 0; i < N; ++i)
    if (names[i] == text) return static_cast<Enum>(i);
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ThresholdMode mode) { return kThresholdNames[static_cast<std::size_t>(mode)]; }
std::string_view to_string(EmergingState state) { return kEmergingNames[static_cast<std::size_t>(state)]; }
std::string_view to_string(EvolvingState state) { return kEvolvingNames[static_cast<std::size_t>(state)]; }

std::optional<ThresholdMode> parse_threshold_mode(std::string_view text) {
  return lookup<ThresholdMode>(kThresholdNames, text);
}
std::optional<EmergingState> parse_emerging_state(std::string_view text) {
  return lookup<EmergingState>(kEmergingNames, text);
}
std::optional<EvolvingState> parse_evolving_state(std::string_view text) {
  return lookup<EvolvingState>(kEvolvingNames, text);
}

std::vector<TopicIndex> Tet::parents(TopicIndex index) const {
  std::vector<TopicIndex> out;
  for (const TetEdge& e : edges)
    if (e.to_index == index && !e.from_root()) out.push_back(e.from_index);
  return out;
}

std::vector<TopicIndex> Tet::children(TopicIndex index) const {
  std::vector<TopicIndex> out;
  for (const TetEdge& e : edges)
    if (e.from_index == index) out.push_back(e.to_index);
  return out;
}

bool Tet::has_root_edge(TopicIndex index) const {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const TetEdge& e) { return e.from_root() && e.to_index == index; });
}

std::optional<std::string> find_invariant_violation(const Tet& tet) {
  const TemporalTopicProfile& profile = tet.profile;
  const std::size_t n = profile.size();
  auto describe = [](const TetEdge& e) {
    return std::to_string(e.from_index) + "->" + std::to_string(e.to_index);
  };

  if (!profile.empty() && tet.latest_year != profile.latest_year()) return "latest_year differs from profile";
  if (tet.classified() && tet.states.size() != n) return "states do not cover every topic";

  // Parent lists by position, plus root-edge flags.
  std::vector<std::vector<std::size_t>> parents(n);
  std::vector<int> root_edges(n, 0);
  for (const TetEdge& e : tet.edges) {
    if (!profile.contains(e.to_index)) return "edge " + describe(e) + " targets an unknown topic";
    const std::size_t to = profile.position_of(e.to_index);
    if (e.from_root()) {
      if (e.tes != 1.0) return "root edge " + describe(e) + " must carry TES 1";
      ++root_edges[to];
      continue;
    }
    if (!profile.contains(e.from_index)) return "edge " + describe(e) + " starts at an unknown topic";
    const std::size_t from = profile.position_of(e.from_index);
    if (!(profile.at_position(from).year < profile.at_position(to).year))
      return "edge " + describe(e) + " does not go forward in time";
    if (!(e.tes >= 0.0 && e.tes <= 1.0)) return "edge " + describe(e) + " has TES outside [0,1]";
    if (std::find(parents[to].begin(), parents[to].end(), from) != parents[to].end())
      return "duplicate edge " + describe(e);
    parents[to].push_back(from);
  }

  // Edges only go forward in time, so position order is a topological order
  // and ancestor sets can be accumulated in one sweep.
  std::vector<std::vector<bool>> ancestors(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) {
    const TopicIndex idx = profile.at_position(v).index;
    if (root_edges[v] > 1) return "topic " + std::to_string(idx) + " has several root edges";
    if ((root_edges[v] == 1) == !parents[v].empty())
      return "topic " + std::to_string(idx) + " must have a root edge iff it has no parent";
    for (std::size_t p : parents[v]) {
      ancestors[v][p] = true;
      for (std::size_t a = 0; a < n; ++a)
        if (ancestors[p][a]) ancestors[v][a] = true;
    }
    for (std::size_t a : parents[v])
      for (std::size_t b : parents[v])
        if (a != b && ancestors[a][b])
          return "parents of topic " + std::to_string(idx) + " are ancestor-related";
  }
  return std::nullopt;
}

}  // namespace topictrack
