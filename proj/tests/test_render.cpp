#include <doctest.h>

#include <json.hpp>

#include "support/dot_check.hpp"
#include "support/fixture.hpp"
#include "support/random_instance.hpp"
#include "support/xml_check.hpp"
#include "topictrack/render.hpp"

using namespace topictrack;
using namespace topictrack::testing;

namespace {

std::string svg_of(const Tet& tet, bool show_root = false) {
  LayoutOptions options;
  options.show_root = show_root;
  return to_svg(tet, compute_layout(tet, options));
}

Tet all_born(std::size_t n) {
  std::vector<TopicRecord> topics;
  for (std::size_t i = 0; i < n; ++i)
    topics.push_back({"t" + std::to_string(i), static_cast<TopicIndex>(i), std::nullopt, 0.5,
                      2001 + static_cast<int>(i), {"w"}});
  TemporalTopicProfile profile(std::move(topics));
  return classify_all(build_tet(profile, TesMatrix(n), {}));
}

}  // namespace

TEST_CASE("SVG of the example") {
  for (ThresholdMode mode : {ThresholdMode::exclusive, ThresholdMode::inclusive}) {
    const Tet tet = fixture_tet(mode);
    const std::string svg = svg_of(tet);
    const auto err = xml_well_formed(svg);
    CHECK_MESSAGE(!err, err.value_or(""));
    CHECK(count_occurrences(svg, "<g id=\"node-") == 11);
    CHECK(count_occurrences(svg, "<path id=\"edge-") == (mode == ThresholdMode::exclusive ? 9 : 10));
    for (int year = 2001; year <= 2005; ++year) CHECK(count_occurrences(svg, ">" + std::to_string(year) + "</text>") == 1);
    CHECK(count_occurrences(svg, "id=\"legend-states\"") == 1);
    CHECK(count_occurrences(svg, "id=\"legend-strength\"") == 1);
    CHECK(count_occurrences(svg, ">Year</text>") == 1);
    CHECK(count_occurrences(svg, ">Topic importance</text>") == 1);
    CHECK(svg.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg ", 0) == 0);
    CHECK(count_occurrences(svg, "xmlns=\"http://www.w3.org/2000/svg\"") == 1);
  }
}

TEST_CASE("SVG edge and node colours") {
  const Tet tet = fixture_tet(ThresholdMode::exclusive);
  const std::string svg = svg_of(tet);
  // A->F carries 0.9, B->C 0.3
  CHECK(count_occurrences(svg, "<path id=\"edge-0-5\" class=\"edge tes-5\"") == 1);
  CHECK(count_occurrences(svg, "<path id=\"edge-1-2\" class=\"edge tes-2\"") == 1);
  CHECK(count_occurrences(svg, std::string("<path class=\"emerging\"")) == 11);
  CHECK(count_occurrences(svg, std::string(svg_color("purple"))) >= 2);
}

TEST_CASE("SVG for an all-born tree has no edges") {
  const std::string svg = svg_of(all_born(4));
  CHECK_FALSE(xml_well_formed(svg).has_value());
  CHECK(count_occurrences(svg, "<path id=\"edge-") == 0);
  CHECK(count_occurrences(svg, "<g id=\"node-") == 4);
}

TEST_CASE("SVG root is drawn only on request") {
  const Tet tet = fixture_tet(ThresholdMode::exclusive);
  const std::string plain = svg_of(tet);
  const std::string rooted = svg_of(tet, true);
  CHECK_FALSE(xml_well_formed(rooted).has_value());
  CHECK(count_occurrences(plain, "node--1") == 0);
  CHECK(count_occurrences(rooted, "<g id=\"node-") == 12);
  CHECK(count_occurrences(rooted, "<path id=\"edge--1-") == 3);
}

TEST_CASE("SVG escapes odd labels") {
  std::vector<TopicRecord> topics{{"a<b", 0, std::string("x & \"y\" <z>"), 0.5, 2001, {"w"}},
                                  {"c'd", 1, std::string("caf\xc3\xa9"), 0.2, 2002, {"w"}}};
  const Tet tet = classify_all(build_tet(TemporalTopicProfile(topics), TesMatrix(2), {}));
  const std::string svg = svg_of(tet);
  const auto err = xml_well_formed(svg);
  CHECK_MESSAGE(!err, err.value_or(""));
  CHECK(count_occurrences(svg, "x &amp; &quot;y&quot; &lt;z&gt;") >= 1);
}

TEST_CASE("DOT of the example") {
  for (ThresholdMode mode : {ThresholdMode::exclusive, ThresholdMode::inclusive}) {
    const Tet tet = fixture_tet(mode);
    const std::string dot = to_dot(tet);
    DotSummary summary;
    const auto err = dot_valid(dot, &summary);
    REQUIRE_MESSAGE(!err, err.value_or(""));
    CHECK(summary.directed);
    CHECK(summary.nodes.size() == 11);
    CHECK(summary.edges.size() == (mode == ThresholdMode::exclusive ? 9u : 10u));
    CHECK(count_occurrences(dot, "n0 -> n5 [tes=0.9]") == 1);
    CHECK(count_occurrences(dot, "n6 -> n8 [tes=0.75]") == 1);
    CHECK(count_occurrences(dot, "emerging_state=\"reborn\"") == 1);
    CHECK(dot.rfind("digraph TET {", 0) == 0);
  }
}

TEST_CASE("DOT edges are sorted and the root is optional") {
  const Tet tet = fixture_tet(ThresholdMode::exclusive);
  DotSummary summary;
  REQUIRE_FALSE(dot_valid(to_dot(tet), &summary).has_value());
  CHECK(std::is_sorted(summary.edges.begin(), summary.edges.end(), [](const auto& a, const auto& b) {
    auto num = [](const std::string& s) { return std::stoi(s.substr(1)); };
    return std::pair(num(a.first), num(a.second)) < std::pair(num(b.first), num(b.second));
  }));

  DotSummary rooted;
  REQUIRE_FALSE(dot_valid(to_dot(tet, true), &rooted).has_value());
  CHECK(rooted.nodes.contains("root"));
  CHECK(rooted.edges.size() == 12);
}

TEST_CASE("DOT of a single topic") {
  DotSummary summary;
  const std::string dot = to_dot(all_born(1));
  REQUIRE_FALSE(dot_valid(dot, &summary).has_value());
  CHECK(summary.nodes == std::set<std::string>{"n0"});
  CHECK(summary.edges.empty());
}

TEST_CASE("DOT quotes odd labels") {
  std::vector<TopicRecord> topics{{"id \"q\"", 0, std::string("back\\slash"), 0.5, 2001, {"w"}}};
  const Tet tet = classify_all(build_tet(TemporalTopicProfile(topics), TesMatrix(1), {}));
  CHECK_FALSE(dot_valid(to_dot(tet)).has_value());
}

TEST_CASE("JSON document shape") {
  const Tet tet = fixture_tet(ThresholdMode::exclusive);
  const auto doc = nlohmann::json::parse(to_json(tet));
  CHECK(doc["params"]["min_tes"] == 0.2);
  CHECK(doc["params"]["threshold_mode"] == "exclusive");
  CHECK(doc["latest_year"] == 2005);
  REQUIRE(doc["nodes"].size() == 11);
  CHECK(doc["nodes"][7]["label"] == "H");
  CHECK(doc["nodes"][7]["emerging_state"] == "reborn");
  CHECK(doc["nodes"][7]["evolving_state"] == "split");
  CHECK(doc["edges"].size() == 12);
  CHECK_THROWS_AS(to_json(build_tet(tet.profile, load_fixture().matrix, tet.params)), std::logic_error);
}

TEST_CASE("JSON round trip") {
  for (ThresholdMode mode : {ThresholdMode::exclusive, ThresholdMode::inclusive}) {
    const Tet tet = fixture_tet(mode);
    const std::string text = to_json(tet);
    const Tet back = from_json(text);
    CHECK(back == tet);
    CHECK(to_json(back) == text);
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Instance inst = random_instance(seed);
    const Tet tet = classify_all(build_tet(inst.profile, inst.matrix, inst.params));
    CAPTURE(seed);
    CHECK(from_json(to_json(tet)) == tet);
  }
}

TEST_CASE("JSON numbers read back exactly") {
  const Tet tet = fixture_tet(ThresholdMode::exclusive);
  const Tet back = from_json(to_json(tet));
  bool found = false;
  for (const TetEdge& e : back.edges)
    if (e.from_index == topic('G') && e.to_index == topic('I')) found = e.tes == 0.75;
  CHECK(found);
}

TEST_CASE("rendering is byte-stable") {
  const Tet tet = fixture_tet(ThresholdMode::inclusive);
  CHECK(to_json(tet) == to_json(fixture_tet(ThresholdMode::inclusive)));
  CHECK(svg_of(tet) == svg_of(fixture_tet(ThresholdMode::inclusive)));
  CHECK(to_dot(tet) == to_dot(fixture_tet(ThresholdMode::inclusive)));
}

TEST_CASE("from_json rejects broken documents") {
  const std::string good = to_json(fixture_tet(ThresholdMode::exclusive));
  auto mutate = [&good](auto&& change) {
    auto doc = nlohmann::ordered_json::parse(good);
    change(doc);
    return doc.dump(2);
  };
  CHECK_THROWS_AS(from_json("{"), TetFormatError);
  CHECK_THROWS_AS(from_json("[]"), TetFormatError);
  CHECK_THROWS_AS(from_json(mutate([](auto& d) { d.erase("nodes"); })), TetFormatError);
  CHECK_THROWS_AS(from_json(mutate([](auto& d) { d["nodes"][0]["emerging_state"] = "zombie"; })), TetFormatError);
  CHECK_THROWS_AS(from_json(mutate([](auto& d) { d["nodes"][0]["weight"] = 2.0; })), TetFormatError);
  CHECK_THROWS_AS(from_json(mutate([](auto& d) { d["edges"][1]["tes"] = 1.5; })), TetFormatError);
  CHECK_THROWS_AS(from_json(mutate([](auto& d) { d["edges"].push_back({{"from_index", 5}, {"to_index", 2}, {"tes", 0.5}}); })),
                  TetFormatError);
  CHECK_THROWS_AS(from_json(mutate([](auto& d) { d["edges"].push_back({{"from_index", 0}, {"to_index", 99}, {"tes", 0.5}}); })),
                  TetFormatError);
  CHECK_THROWS_AS(from_json(mutate([](auto& d) { d["params"]["threshold_mode"] = "fuzzy"; })), TetFormatError);
}

TEST_CASE("colour tokens") {
  CHECK(svg_color("none") == "#ffffff");
  CHECK(svg_color("tes-1") != svg_color("tes-5"));
}
