#pragma once

#include <set>
#include <span>
#include <vector>

#include "topictrack/model.hpp"

namespace topictrack {

struct Candidate {
  TopicIndex index = 0;
  double tes = 0.0;
  int year = 0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Strict ordering used to rank parent candidates: higher TES first, then the
/// more recent topic, then the lower index.
bool ranks_before(const Candidate& a, const Candidate& b);

/// Earlier topics whose TES towards `v` passes `params.min_tes`, sorted by
/// ranks_before().
std::vector<Candidate> candidate_parents(TopicIndex v, const TesMatrix& matrix, const TemporalTopicProfile& profile,
                                         const EvolutionParams& params);

/// Topics reachable from `u` by walking non-root edges backwards. The dummy
/// root is never included.
std::set<TopicIndex> ancestors(std::span<const TetEdge> edges, TopicIndex u);

/// Keeps the best candidate of every evolutionary pathway.
///
/// Scans `candidates` (already in ranks_before() order) and accepts one iff
/// it is neither an ancestor nor a descendant of an accepted candidate. Parents
/// on unrelated pathways all survive, which is how fused topics arise.
std::vector<Candidate> prune_candidates(std::span<const Candidate> candidates, std::span<const TetEdge> edges);

/// Builds the topic evolution tree. Topics are processed in profile order;
/// each gets edges from its pruned candidates, or a root edge when none
/// remain. States are left empty (see classify_all).
///
/// Throws std::invalid_argument on a matrix/profile dimension mismatch or
/// invalid params.
Tet build_tet(const TemporalTopicProfile& profile, const TesMatrix& matrix, const EvolutionParams& params);

}  // namespace topictrack
