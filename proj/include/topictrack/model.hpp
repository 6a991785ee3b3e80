#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace topictrack {

/// Topic index as it appears in the profile's `index` column. The dummy root
/// of a topic evolution tree is carried implicitly as kRootIndex.
using TopicIndex = int;
inline constexpr TopicIndex kRootIndex = -1;

struct TopicRecord {
  std::string id;
  TopicIndex index = 0;
  std::optional<std::string> label;
  double weight = 0.0;
  int year = 0;
  std::vector<std::string> words;

  /// Text shown next to the node: the label when present, the id otherwise.
  const std::string& display_label() const { return label ? *label : id; }

  friend bool operator==(const TopicRecord&, const TopicRecord&) = default;
};

/// Time-stamped topics, sorted ascending by (year, index).
///
/// The sort position of a topic is also its row/column in the TES matrix.
/// Topic indices are a permutation of 0..N-1 but need not coincide with
/// positions, so lookups by index go through position_of().
class TemporalTopicProfile {
 public:
  TemporalTopicProfile() = default;

  /// Takes topics already validated by the caller. Sorts by (year, index)
  /// and throws std::invalid_argument if any profile invariant fails.
  explicit TemporalTopicProfile(std::vector<TopicRecord> topics);

  std::size_t size() const { return topics_.size(); }
  bool empty() const { return topics_.empty(); }

  const std::vector<TopicRecord>& topics() const { return topics_; }
  const TopicRecord& at_position(std::size_t pos) const { return topics_.at(pos); }
  const TopicRecord& by_index(TopicIndex index) const { return topics_.at(position_of(index)); }

  std::size_t position_of(TopicIndex index) const;
  bool contains(TopicIndex index) const {
    return index >= 0 && static_cast<std::size_t>(index) < topics_.size();
  }

  const std::vector<int>& distinct_years() const { return distinct_years_; }
  int first_year() const { return distinct_years_.front(); }
  int latest_year() const { return distinct_years_.back(); }

  friend bool operator==(const TemporalTopicProfile& a, const TemporalTopicProfile& b) {
    return a.topics_ == b.topics_;
  }

 private:
  std::vector<TopicRecord> topics_;
  std::vector<std::size_t> position_of_index_;
  std::vector<int> distinct_years_;
};

/// Dense N x N topic evolution strengths in profile sort order.
///
/// Row = older topic, column = newer topic. Only the strict upper triangle
/// carries information; the diagonal is 1 and the lower triangle is stored
/// as 0.
class TesMatrix {
 public:
  TesMatrix() = default;
  explicit TesMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {
    for (std::size_t i = 0; i < n; ++i) entries_[i * n + i] = 1.0;
  }

  std::size_t n() const { return n_; }
  double operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  double& operator()(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }

  friend bool operator==(const TesMatrix&, const TesMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
};

enum class ThresholdMode { inclusive, exclusive };

struct EvolutionParams {
  double min_tes = 0.2;
  int min_reborn = 2;
  int min_dead = 1;
  ThresholdMode threshold_mode = ThresholdMode::inclusive;

  /// Throws std::invalid_argument when a field is out of its domain.
  void validate() const;

  friend bool operator==(const EvolutionParams&, const EvolutionParams&) = default;
};

struct TetEdge {
  TopicIndex from_index = kRootIndex;
  TopicIndex to_index = 0;
  double tes = 1.0;  // 1 for root edges

  bool from_root() const { return from_index == kRootIndex; }

  friend bool operator==(const TetEdge&, const TetEdge&) = default;
};

enum class EmergingState { born, fused, reborn, flourishing };
enum class EvolvingState { split, dead, flourishing };

struct NodeStates {
  EmergingState emerging = EmergingState::flourishing;
  EvolvingState evolving = EvolvingState::flourishing;

  friend bool operator==(const NodeStates&, const NodeStates&) = default;
};

std::string_view to_string(ThresholdMode mode);
std::string_view to_string(EmergingState state);
std::string_view to_string(EvolvingState state);

std::optional<ThresholdMode> parse_threshold_mode(std::string_view text);
std::optional<EmergingState> parse_emerging_state(std::string_view text);
std::optional<EvolvingState> parse_evolving_state(std::string_view text);

/// Topic evolution tree: a rooted DAG over the profile's topics.
///
/// `states` is empty until classification and otherwise holds one entry per
/// profile position.
struct Tet {
  TemporalTopicProfile profile;
  std::vector<TetEdge> edges;
  std::vector<NodeStates> states;
  EvolutionParams params;
  int latest_year = 0;

  bool classified() const { return !states.empty(); }
  const NodeStates& states_of(TopicIndex index) const { return states.at(profile.position_of(index)); }

  /// Non-root parents of `index`, in edge order.
  std::vector<TopicIndex> parents(TopicIndex index) const;
  /// Non-root children of `index`, in edge order.
  std::vector<TopicIndex> children(TopicIndex index) const;
  bool has_root_edge(TopicIndex index) const;

  friend bool operator==(const Tet&, const Tet&) = default;
};

/// Checks every structural invariant of a built TET (year ordering,
/// rootedness, parent antichains, matrix-free parts only). Returns a
/// description of the first violation, or nullopt.
std::optional<std::string> find_invariant_violation(const Tet& tet);

}  // namespace topictrack
