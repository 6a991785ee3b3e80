#include "topictrack/layout.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace topictrack {

double Box::intersection_area(const Box& other) const {
  const double w = std::min(right(), other.right()) - std::max(left, other.left);
  const double h = std::min(bottom(), other.bottom()) - std::max(top, other.top);
  return (w > 0.0 && h > 0.0) ? w * h : 0.0;
}

std::string_view to_string(Compass direction) {
  static constexpr std::array<std::string_view, 8> names{"N", "NE", "E", "SE", "S", "SW", "W", "NW"};
  return names[static_cast<std::size_t>(direction)];
}

double FontMetrics::text_width(std::string_view utf8) const {
  std::size_t glyphs = 0;
  for (unsigned char c : utf8)
    if ((c & 0xC0) != 0x80) ++glyphs;
  return static_cast<double>(std::max<std::size_t>(glyphs, 1)) * char_width;
}

PlotArea plot_area(const LayoutOptions& options) {
  return {options.margin_left, options.margin_top, options.width - options.margin_right,
          options.height - options.margin_bottom};
}

namespace {

struct YearScale {
  int first = 0;
  int last = 0;
  double x0 = 0.0;
  double x1 = 0.0;

  double operator()(int year) const {
    if (first == last) return 0.5 * (x0 + x1);
    return x0 + (x1 - x0) * static_cast<double>(year - first) / static_cast<double>(last - first);
  }
};

YearScale year_scale(const Tet& tet, const PlotArea& plot, double padding) {
  const auto& years = tet.profile.distinct_years();
  return {years.front(), years.back(), plot.left + padding, plot.right - padding};
}

double weight_y(double weight, const PlotArea& plot) { return plot.bottom - weight * (plot.bottom - plot.top); }

}  // namespace

std::map<TopicIndex, Point> compute_positions(const Tet& tet, const LayoutOptions& options) {
  std::map<TopicIndex, Point> positions;
  if (tet.profile.empty()) return positions;

  const PlotArea plot = plot_area(options);
  const YearScale x_of = year_scale(tet, plot, options.inner_padding);

  // Half the distance to the nearest neighbouring year band.
  const auto& years = tet.profile.distinct_years();
  double half_band = 0.5 * (x_of.x1 - x_of.x0);
  for (std::size_t i = 1; i < years.size(); ++i)
    half_band = std::min(half_band, 0.5 * (x_of(years[i]) - x_of(years[i - 1])));
  if (years.size() == 1) half_band = 0.5 * (plot.right - plot.left);

  // Group coincident topics; the profile order already sorts each group by index.
  std::map<std::pair<int, double>, std::vector<TopicIndex>> groups;
  for (const TopicRecord& t : tet.profile.topics()) groups[{t.year, t.weight}].push_back(t.index);

  for (const auto& [key, members] : groups) {
    const auto& [year, weight] = key;
    const double x = x_of(year);
    const double y = weight_y(weight, plot);
    const std::size_t m = members.size();
    double step = 0.0;
    if (m > 1) step = std::min(3.0 * options.node_radius, 1.8 * half_band / static_cast<double>(m - 1));
    for (std::size_t k = 0; k < m; ++k) {
      const double offset = (static_cast<double>(k) - 0.5 * static_cast<double>(m - 1)) * step;
      positions[members[k]] = {x + offset, y};
    }
  }

  if (options.show_root) positions[kRootIndex] = {plot.left + 0.5 * options.inner_padding, plot.top};
  return positions;
}

std::string_view tes_color(double tes) {
  if (!(tes >= 0.0 && tes <= 1.0)) throw std::domain_error("TES outside [0,1]");
  static constexpr std::array<std::string_view, 5> tokens{"tes-1", "tes-2", "tes-3", "tes-4", "tes-5"};
  // Compare against the decimal bin edges directly so 0.2, 0.4, ... land in
  // the upper bin as written.
  static constexpr std::array<double, 4> edges{0.2, 0.4, 0.6, 0.8};
  std::size_t bin = 0;
  while (bin < edges.size() && tes >= edges[bin]) ++bin;
  return tokens[bin];
}

std::pair<std::string_view, std::string_view> state_colors(const NodeStates& states) {
  std::string_view emerging = "none";
  switch (states.emerging) {
    case EmergingState::born: emerging = "green"; break;
    case EmergingState::fused: emerging = "purple"; break;
    case EmergingState::reborn: emerging = "orange"; break;
    case EmergingState::flourishing: break;
  }
  std::string_view evolving = "none";
  switch (states.evolving) {
    case EvolvingState::split: evolving = "blue"; break;
    case EvolvingState::dead: evolving = "red"; break;
    case EvolvingState::flourishing: break;
  }
  return {emerging, evolving};
}

namespace {

Box label_box(const Point& node, Compass direction, double width, double height, double distance) {
  static constexpr double kDiag = 0.70710678118654752;
  double dx = 0.0;
  double dy = 0.0;
  double reach = distance;
  switch (direction) {
    case Compass::N: dy = -1; break;
    case Compass::S: dy = 1; break;
    case Compass::E: dx = 1; break;
    case Compass::W: dx = -1; break;
    case Compass::NE: dx = 1, dy = -1, reach *= kDiag; break;
    case Compass::NW: dx = -1, dy = -1, reach *= kDiag; break;
    case Compass::SE: dx = 1, dy = 1, reach *= kDiag; break;
    case Compass::SW: dx = -1, dy = 1, reach *= kDiag; break;
  }
  const double cx = node.x + dx * (reach + 0.5 * width);
  const double cy = node.y + dy * (reach + 0.5 * height);
  return {cx - 0.5 * width, cy - 0.5 * height, width, height};
}

}  // namespace

std::map<TopicIndex, LabelAnchor> place_labels(const std::map<TopicIndex, Point>& positions,
                                               const std::map<TopicIndex, std::string>& labels, double glyph_radius,
                                               const FontMetrics& font, const Box& bounds) {
  static constexpr std::array<Compass, 8> preference{Compass::N,  Compass::S,  Compass::E,  Compass::W,
                                                     Compass::NE, Compass::NW, Compass::SE, Compass::SW};
  const double distance = glyph_radius + 3.0;
  constexpr double kAreaEpsilon = 1e-6;

  std::vector<std::pair<TopicIndex, Box>> glyphs;
  for (const auto& [index, p] : positions)
    glyphs.emplace_back(index, Box{p.x - glyph_radius, p.y - glyph_radius, 2 * glyph_radius, 2 * glyph_radius});

  std::map<TopicIndex, LabelAnchor> placed;
  for (const auto& [index, text] : labels) {
    const auto pos = positions.find(index);
    if (pos == positions.end()) continue;
    const double width = font.text_width(text);
    const double height = font.size;

    LabelAnchor best;
    double best_cost = 0.0;
    bool first = true;
    for (Compass dir : preference) {
      const Box box = label_box(pos->second, dir, width, height, distance);
      // Round-off in area differences must not beat an earlier direction.
      double cost = std::max(0.0, box.area() - box.intersection_area(bounds));
      if (cost < kAreaEpsilon) cost = 0.0;
      for (const auto& [other, anchor] : placed) cost += box.intersection_area(anchor.box);
      for (const auto& [other, glyph] : glyphs)
        if (other != index) cost += box.intersection_area(glyph);
      if (first || cost < best_cost - kAreaEpsilon) {
        best = {dir, box};
        best_cost = cost;
        first = false;
      }
      if (best_cost < kAreaEpsilon) break;
    }
    placed.emplace(index, best);
  }
  return placed;
}

AxisTicks axis_ticks(const Tet& tet, const LayoutOptions& options) {
  AxisTicks ticks;
  const PlotArea plot = plot_area(options);
  if (!tet.profile.empty()) {
    const YearScale x_of = year_scale(tet, plot, options.inner_padding);
    for (int year : tet.profile.distinct_years()) ticks.x.emplace_back(year, x_of(year));
  }
  for (double v : {0.0, 0.25, 0.5, 0.75, 1.0}) ticks.y.emplace_back(v, weight_y(v, plot));
  return ticks;
}

TetLayout compute_layout(const Tet& tet, const LayoutOptions& options) {
  TetLayout layout;
  layout.width = options.width;
  layout.height = options.height;
  layout.plot = plot_area(options);
  layout.node_radius = options.node_radius;
  layout.show_root = options.show_root;
  layout.positions = compute_positions(tet, options);
  layout.ticks = axis_ticks(tet, options);

  for (const TetEdge& e : tet.edges)
    layout.edge_colors[{e.from_index, e.to_index}] = e.from_root() ? "root" : std::string(tes_color(e.tes));

  if (tet.classified()) {
    for (const TopicRecord& t : tet.profile.topics()) {
      auto [emerging, evolving] = state_colors(tet.states_of(t.index));
      layout.node_colors[t.index] = {std::string(emerging), std::string(evolving)};
    }
  }

  std::map<TopicIndex, std::string> labels;
  for (const TopicRecord& t : tet.profile.topics()) labels[t.index] = t.display_label();
  layout.label_anchors =
      place_labels(layout.positions, labels, options.node_radius, options.font, Box{0, 0, options.width, options.height});
  return layout;
}

}  // namespace topictrack
