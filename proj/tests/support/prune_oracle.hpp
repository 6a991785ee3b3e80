#pragma once

// Brute-force reference for parent pruning. Deliberately shares no code with
// the library: ancestry comes from a Warshall closure over an adjacency
// matrix, and the result is chosen by exhaustive subset enumeration.

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "topictrack/model.hpp"

namespace topictrack::testing {

struct OracleCandidate {
  TopicIndex index;
  double tes;
  int year;
};

/// (tes, year, -index): larger is better.
inline auto oracle_key(const OracleCandidate& c) { return std::make_tuple(c.tes, c.year, -c.index); }

/// reach[a][b] == true iff a is a proper ancestor of b via non-root edges.
class Reachability {
 public:
  Reachability(const std::vector<TetEdge>& edges, std::size_t n) : reach_(n, std::vector<bool>(n, false)) {
    for (const TetEdge& e : edges)
      if (e.from_index >= 0) reach_[e.from_index][e.to_index] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (reach_[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (reach_[k][j]) reach_[i][j] = true;
  }
  bool related(TopicIndex a, TopicIndex b) const { return reach_[a][b] || reach_[b][a]; }

 private:
  std::vector<std::vector<bool>> reach_;
};

/// The unique justified antichain with the lexicographically largest
/// descending key sequence.
inline std::vector<OracleCandidate> oracle_prune(const std::vector<OracleCandidate>& candidates,
                                                 const Reachability& reach) {
  const std::size_t k = candidates.size();
  std::vector<OracleCandidate> best;
  bool have_best = false;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<OracleCandidate> chosen;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) chosen.push_back(candidates[i]);

    bool antichain = true;
    for (std::size_t a = 0; a < chosen.size() && antichain; ++a)
      for (std::size_t b = a + 1; b < chosen.size() && antichain; ++b)
        if (reach.related(chosen[a].index, chosen[b].index)) antichain = false;
    if (!antichain) continue;

    bool justified = true;
    for (std::size_t i = 0; i < k && justified; ++i) {
      if (mask & (1u << i)) continue;
      const bool covered = std::any_of(chosen.begin(), chosen.end(), [&](const OracleCandidate& r) {
        return reach.related(r.index, candidates[i].index) && oracle_key(r) > oracle_key(candidates[i]);
      });
      if (!covered) justified = false;
    }
    if (!justified) continue;

    std::sort(chosen.begin(), chosen.end(),
              [](const OracleCandidate& a, const OracleCandidate& b) { return oracle_key(a) > oracle_key(b); });
    auto key_seq = [](const std::vector<OracleCandidate>& v) {
      std::vector<std::tuple<double, int, int>> keys;
      for (const auto& c : v) keys.push_back(oracle_key(c));
      return keys;
    };
    if (!have_best || key_seq(chosen) > key_seq(best)) {
      best = std::move(chosen);
      have_best = true;
    }
  }
  return best;
}

}  // namespace topictrack::testing
