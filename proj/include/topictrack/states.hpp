#pragma once

#include "topictrack/model.hpp"

namespace topictrack {

/// born (no parent), fused (two or more parents), reborn (parent older than
/// min_reborn years), otherwise flourishing. First match wins.
EmergingState classify_emerging(const Tet& tet, TopicIndex v);

/// split (two or more children), dead (childless and silent for more than
/// min_dead years before the latest year), otherwise flourishing.
EvolvingState classify_evolving(const Tet& tet, TopicIndex v);

/// Returns a copy of `tet` with both states assigned to every topic.
Tet classify_all(Tet tet);

}  // namespace topictrack
