#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "topictrack/model.hpp"

namespace topictrack::testing {

struct Instance {
  TemporalTopicProfile profile;
  TesMatrix matrix;
  EvolutionParams params;
};

/// Random profile + valid TES matrix. TES values come from a 0.1 grid so
/// that ties (and therefore the tie-break rules) are exercised often. Topic
/// indices are a random permutation, so index order and year order differ.
inline Instance random_instance(std::uint64_t seed, std::size_t max_topics = 12) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  const std::size_t n = static_cast<std::size_t>(uniform(1, static_cast<int>(max_topics)));
  const int span = uniform(1, 6);
  std::vector<int> indices(n);
  std::iota(indices.begin(), indices.end(), 0);
  std::shuffle(indices.begin(), indices.end(), rng);

  std::vector<TopicRecord> topics;
  for (std::size_t i = 0; i < n; ++i) {
    TopicRecord t;
    t.index = indices[i];
    t.id = "t" + std::to_string(indices[i]);
    if (uniform(0, 1) == 1) t.label = "L" + std::to_string(indices[i]);
    t.weight = uniform(0, 20) / 20.0;
    t.year = 2000 + uniform(0, span - 1);
    t.words = {"w" + std::to_string(i), "common"};
    topics.push_back(std::move(t));
  }
  TemporalTopicProfile profile(std::move(topics));

  TesMatrix matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (profile.at_position(i).year < profile.at_position(j).year) matrix(i, j) = uniform(0, 10) / 10.0;

  EvolutionParams params;
  params.min_tes = uniform(0, 6) / 10.0;
  params.min_reborn = uniform(0, 3);
  params.min_dead = uniform(0, 3);
  params.threshold_mode = uniform(0, 1) == 0 ? ThresholdMode::inclusive : ThresholdMode::exclusive;
  return {std::move(profile), std::move(matrix), params};
}

}  // namespace topictrack::testing
