#include <doctest.h>

#include "support/fixture.hpp"
#include "topictrack/model.hpp"

using namespace topictrack;
using namespace topictrack::testing;

namespace {

TopicRecord record(std::string id, TopicIndex index, int year, double weight = 0.5) {
  TopicRecord t;
  t.id = std::move(id);
  t.index = index;
  t.year = year;
  t.weight = weight;
  t.words = {"w"};
  return t;
}

}  // namespace

TEST_CASE("profile sorts by year then index and maps indices to positions") {
  TemporalTopicProfile p({record("c", 0, 2003), record("a", 2, 2001), record("b", 1, 2001)});
  REQUIRE(p.size() == 3);
  CHECK(p.at_position(0).id == "b");
  CHECK(p.at_position(1).id == "a");
  CHECK(p.at_position(2).id == "c");
  CHECK(p.position_of(0) == 2);
  CHECK(p.by_index(2).id == "a");
  CHECK(p.distinct_years() == std::vector<int>{2001, 2003});
  CHECK(p.latest_year() == 2003);
}

TEST_CASE("profile rejects broken invariants") {
  CHECK_THROWS_AS(TemporalTopicProfile(std::vector<TopicRecord>{}), std::invalid_argument);
  CHECK_THROWS_AS(TemporalTopicProfile({record("a", 0, 2001), record("b", 0, 2002)}), std::invalid_argument);
  CHECK_THROWS_AS(TemporalTopicProfile({record("a", 0, 2001), record("b", 2, 2002)}), std::invalid_argument);
  CHECK_THROWS_AS(TemporalTopicProfile({record("a", 0, 2001), record("a", 1, 2002)}), std::invalid_argument);
  CHECK_THROWS_AS(TemporalTopicProfile({record("a", 0, 2001, 1.5)}), std::invalid_argument);
  CHECK_THROWS_AS(TemporalTopicProfile({record("", 0, 2001)}), std::invalid_argument);
  auto no_words = record("a", 0, 2001);
  no_words.words.clear();
  CHECK_THROWS_AS(TemporalTopicProfile({no_words}), std::invalid_argument);
}

TEST_CASE("display label falls back to id") {
  auto t = record("t1", 0, 2001);
  CHECK(t.display_label() == "t1");
  t.label = "A";
  CHECK(t.display_label() == "A");
}

TEST_CASE("fresh TES matrix has a unit diagonal") {
  TesMatrix m(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(m(i, j) == (i == j ? 1.0 : 0.0));
}

TEST_CASE("params validation") {
  EvolutionParams p;
  CHECK_NOTHROW(p.validate());
  p.min_tes = 1.01;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = {};
  p.min_reborn = -1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = {};
  p.min_dead = -1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("state names round-trip") {
  for (auto s : {EmergingState::born, EmergingState::fused, EmergingState::reborn, EmergingState::flourishing})
    CHECK(parse_emerging_state(to_string(s)) == s);
  for (auto s : {EvolvingState::split, EvolvingState::dead, EvolvingState::flourishing})
    CHECK(parse_evolving_state(to_string(s)) == s);
  CHECK(parse_threshold_mode("exclusive") == ThresholdMode::exclusive);
  CHECK_FALSE(parse_emerging_state("dead").has_value());
  CHECK_FALSE(parse_threshold_mode("Inclusive").has_value());
}

TEST_CASE("invariant checker accepts built trees and flags corruptions") {
  Tet tet = fixture_tet(ThresholdMode::exclusive);
  CHECK_FALSE(find_invariant_violation(tet).has_value());

  SUBCASE("backwards edge") {
    tet.edges.push_back({topic('F'), topic('C'), 0.5});
    CHECK(find_invariant_violation(tet).has_value());
  }
  SUBCASE("missing root edge") {
    tet.edges.erase(std::remove_if(tet.edges.begin(), tet.edges.end(),
                                   [](const TetEdge& e) { return e.from_root() && e.to_index == topic('E'); }),
                    tet.edges.end());
    CHECK(find_invariant_violation(tet).has_value());
  }
  SUBCASE("root edge on a node with a parent") {
    tet.edges.push_back({kRootIndex, topic('C'), 1.0});
    CHECK(find_invariant_violation(tet).has_value());
  }
  SUBCASE("ancestor-related parents") {
    // B is an ancestor of D, which is already a parent of F.
    tet.edges.push_back({topic('B'), topic('F'), 0.1});
    CHECK(find_invariant_violation(tet).has_value());
  }
}

TEST_CASE("parents and children queries") {
  const Tet tet = fixture_tet(ThresholdMode::exclusive);
  auto parents = tet.parents(topic('F'));
  std::sort(parents.begin(), parents.end());
  CHECK(parents == std::vector<TopicIndex>{topic('A'), topic('D')});
  auto children = tet.children(topic('H'));
  std::sort(children.begin(), children.end());
  CHECK(children == std::vector<TopicIndex>{topic('J'), topic('K')});
  CHECK(tet.has_root_edge(topic('E')));
  CHECK_FALSE(tet.has_root_edge(topic('G')));
}
