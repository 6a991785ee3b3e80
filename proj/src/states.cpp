#include "topictrack/states.hpp"

#include <algorithm>
#include <limits>

namespace topictrack {

EmergingState classify_emerging(const Tet& tet, TopicIndex v) {
  const std::vector<TopicIndex> parents = tet.parents(v);
  if (parents.empty()) return EmergingState::born;
  if (parents.size() >= 2) return EmergingState::fused;

  const int year = tet.profile.by_index(v).year;
  int min_gap = std::numeric_limits<int>::max();
  for (TopicIndex p : parents) min_gap = std::min(min_gap, year - tet.profile.by_index(p).year);
  return min_gap > tet.params.min_reborn ? EmergingState::reborn : EmergingState::flourishing;
}

EvolvingState classify_evolving(const Tet& tet, TopicIndex v) {
  const std::size_t children = tet.children(v).size();
  if (children >= 2) return EvolvingState::split;
  if (children == 0 && tet.latest_year - tet.profile.by_index(v).year > tet.params.min_dead)
    return EvolvingState::dead;
  return EvolvingState::flourishing;
}

Tet classify_all(Tet tet) {
  std::vector<NodeStates> states;
  states.reserve(tet.profile.size());
  for (const TopicRecord& t : tet.profile.topics())
    states.push_back({classify_emerging(tet, t.index), classify_evolving(tet, t.index)});
  tet.states = std::move(states);
  return tet;
}

}  // namespace topictrack
