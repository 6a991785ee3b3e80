#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "topictrack/builder.hpp"
#include "topictrack/ingest.hpp"
#include "topictrack/states.hpp"

namespace topictrack::testing {

inline std::string data_path(const std::string& name) { return std::string(TOPICTRACK_TEST_DATA) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing test file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string read_data(const std::string& name) { return read_text(data_path(name)); }

struct Fixture {
  TemporalTopicProfile profile;
  TesMatrix matrix;
};

/// The 11-topic example (labels A..K, years 2001..2005).
inline Fixture load_fixture() {
  auto profile = parse_profile(read_data("example_profile.csv")).value;
  auto matrix = parse_tes(read_data("example_tes.csv"), profile).value;
  return {std::move(profile), std::move(matrix)};
}

inline EvolutionParams fixture_params(ThresholdMode mode) {
  EvolutionParams p;
  p.min_tes = 0.2;
  p.min_reborn = 2;
  p.min_dead = 1;
  p.threshold_mode = mode;
  return p;
}

inline Tet fixture_tet(ThresholdMode mode) {
  const Fixture f = load_fixture();
  return classify_all(build_tet(f.profile, f.matrix, fixture_params(mode)));
}

/// Label letter -> topic index in the fixture (A=0 .. K=10).
inline TopicIndex topic(char label) { return label - 'A'; }

}  // namespace topictrack::testing
