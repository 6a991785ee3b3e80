#include "topictrack/builder.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace topictrack {

bool ranks_before(const Candidate& a, const Candidate& b) {
  if (a.tes != b.tes) return a.tes > b.tes;
  if (a.year != b.year) return a.year > b.year;
  return a.index < b.index;
}

namespace {

bool passes(double tes, const EvolutionParams& params) {
  return params.threshold_mode == ThresholdMode::inclusive ? tes >= params.min_tes : tes > params.min_tes;
}

// Greedy scan shared by the public entry point and build_tet; `is_ancestor(a, b)`
// is true when a is an ancestor of b.
template <typename AncestorFn>
std::vector<Candidate> greedy_prune(std::span<const Candidate> candidates, AncestorFn&& is_ancestor) {
  std::vector<Candidate> accepted;
  for (const Candidate& c : candidates) {
    const bool related = std::any_of(accepted.begin(), accepted.end(), [&](const Candidate& a) {
      return is_ancestor(a.index, c.index) || is_ancestor(c.index, a.index);
    });
    if (!related) accepted.push_back(c);
  }
  return accepted;
}

}  // namespace

std::vector<Candidate> candidate_parents(TopicIndex v, const TesMatrix& matrix, const TemporalTopicProfile& profile,
                                         const EvolutionParams& params) {
  const std::size_t col = profile.position_of(v);
  const int year = profile.at_position(col).year;
  std::vector<Candidate> out;
  for (std::size_t row = 0; row < col; ++row) {
    const TopicRecord& u = profile.at_position(row);
    if (u.year >= year) break;  // contemporaries sit at the end of the prefix
    const double tes = matrix(row, col);
    if (passes(tes, params)) out.push_back({u.index, tes, u.year});
  }
  std::sort(out.begin(), out.end(), ranks_before);
  return out;
}

std::set<TopicIndex> ancestors(std::span<const TetEdge> edges, TopicIndex u) {
  std::multimap<TopicIndex, TopicIndex> parents_of;
  for (const TetEdge& e : edges)
    if (!e.from_root()) parents_of.emplace(e.to_index, e.from_index);

  std::set<TopicIndex> seen;
  std::vector<TopicIndex> stack{u};
  while (!stack.empty()) {
    const TopicIndex x = stack.back();
    stack.pop_back();
    auto [lo, hi] = parents_of.equal_range(x);
    for (auto it = lo; it != hi; ++it)
      if (seen.insert(it->second).second) stack.push_back(it->second);
  }
  return seen;
}

std::vector<Candidate> prune_candidates(std::span<const Candidate> candidates, std::span<const TetEdge> edges) {
  std::map<TopicIndex, std::set<TopicIndex>> cache;
  for (const Candidate& c : candidates) cache.emplace(c.index, ancestors(edges, c.index));
  return greedy_prune(candidates, [&](TopicIndex a, TopicIndex b) { return cache.at(b).contains(a); });
}

Tet build_tet(const TemporalTopicProfile& profile, const TesMatrix& matrix, const EvolutionParams& params) {
  params.validate();
  if (matrix.n() != profile.size())
    throw std::invalid_argument("DimensionMismatch: matrix is " + std::to_string(matrix.n()) + "x" +
                                std::to_string(matrix.n()) + " but the profile has " +
                                std::to_string(profile.size()) + " topics");

  const std::size_t n = profile.size();
  Tet tet;
  tet.profile = profile;
  tet.params = params;
  tet.latest_year = profile.empty() ? 0 : profile.latest_year();

  // Ancestor sets by position. A topic's ancestors are final once its parents
  // are chosen, because later edges only point at later topics.
  std::vector<std::vector<bool>> ancestor(n, std::vector<bool>(n, false));
  auto is_ancestor = [&](TopicIndex a, TopicIndex b) {
    return ancestor[profile.position_of(b)][profile.position_of(a)];
  };

  for (std::size_t pos = 0; pos < n; ++pos) {
    const TopicIndex v = profile.at_position(pos).index;
    const std::vector<Candidate> candidates = candidate_parents(v, matrix, profile, params);
    const std::vector<Candidate> parents = greedy_prune(candidates, is_ancestor);
    if (parents.empty()) {
      tet.edges.push_back({kRootIndex, v, 1.0});
      continue;
    }
    for (const Candidate& p : parents) {
      tet.edges.push_back({p.index, v, p.tes});
      const std::size_t ppos = profile.position_of(p.index);
      ancestor[pos][ppos] = true;
      for (std::size_t a = 0; a < ppos; ++a)
        if (ancestor[ppos][a]) ancestor[pos][a] = true;
    }
  }
  return tet;
}

}  // namespace topictrack
