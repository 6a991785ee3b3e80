#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topictrack/model.hpp"

namespace topictrack {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Axis-aligned rectangle in canvas units (y grows downwards).
struct Box {
  double left = 0.0;
  double top = 0.0;
  double width = 0.0;
  double height = 0.0;

  double right() const { return left + width; }
  double bottom() const { return top + height; }
  double area() const { return width * height; }
  double intersection_area(const Box& other) const;
  bool intersects(const Box& other) const { return intersection_area(other) > 0.0; }

  friend bool operator==(const Box&, const Box&) = default;
};

enum class Compass { N, NE, E, SE, S, SW, W, NW };
std::string_view to_string(Compass direction);

struct LabelAnchor {
  Compass direction = Compass::N;
  Box box;
  friend bool operator==(const LabelAnchor&, const LabelAnchor&) = default;
};

/// Fixed-advance approximation of the label font.
struct FontMetrics {
  double size = 12.0;
  double char_width = 7.2;

  double text_width(std::string_view utf8) const;
};

struct LayoutOptions {
  double width = 1000.0;
  double height = 600.0;
  double margin_left = 70.0;
  double margin_right = 210.0;  // legends live here
  double margin_top = 30.0;
  double margin_bottom = 60.0;
  double inner_padding = 40.0;  // keeps first/last year off the frame
  double node_radius = 9.0;
  FontMetrics font;
  bool show_root = false;
};

/// Plot frame; weight 0 sits on `bottom`, weight 1 on `top`.
struct PlotArea {
  double left = 0.0;
  double top = 0.0;
  double right = 0.0;
  double bottom = 0.0;
  friend bool operator==(const PlotArea&, const PlotArea&) = default;
};

struct AxisTicks {
  std::vector<std::pair<int, double>> x;     // (year, x)
  std::vector<std::pair<double, double>> y;  // (value, y)
  friend bool operator==(const AxisTicks&, const AxisTicks&) = default;
};

using EdgeKey = std::pair<TopicIndex, TopicIndex>;

struct TetLayout {
  std::map<TopicIndex, Point> positions;
  std::map<TopicIndex, LabelAnchor> label_anchors;
  std::map<EdgeKey, std::string> edge_colors;
  std::map<TopicIndex, std::pair<std::string, std::string>> node_colors;  // (emerging, evolving)
  AxisTicks ticks;
  PlotArea plot;
  double width = 0.0;
  double height = 0.0;
  double node_radius = 0.0;
  bool show_root = false;
  friend bool operator==(const TetLayout&, const TetLayout&) = default;
};

PlotArea plot_area(const LayoutOptions& options);

/// x is linear in year, y linear in weight. Topics sharing (year, weight)
/// are spread horizontally around their year, lower index on the left, never
/// reaching halfway to the neighbouring year. The root, when shown, sits in
/// the top-left corner of the plot.
std::map<TopicIndex, Point> compute_positions(const Tet& tet, const LayoutOptions& options = {});

/// Five equal-width bins over [0,1], "tes-1" (weakest) .. "tes-5". Bins are
/// left-closed; the last one also includes 1. Throws std::domain_error
/// outside [0,1].
std::string_view tes_color(double tes);

/// (emerging, evolving) colour tokens; "none" for flourishing.
std::pair<std::string_view, std::string_view> state_colors(const NodeStates& states);

/// Greedy compass placement, one pass in ascending topic index. Each label
/// takes the offset with the least overlap against labels placed so far,
/// every other node glyph and the area outside `bounds`. Ties go to the
/// earlier direction in N, S, E, W, NE, NW, SE, SW.
std::map<TopicIndex, LabelAnchor> place_labels(const std::map<TopicIndex, Point>& positions,
                                               const std::map<TopicIndex, std::string>& labels, double glyph_radius,
                                               const FontMetrics& font, const Box& bounds);

AxisTicks axis_ticks(const Tet& tet, const LayoutOptions& options = {});

/// Full geometry for a classified TET.
TetLayout compute_layout(const Tet& tet, const LayoutOptions& options = {});

}  // namespace topictrack
