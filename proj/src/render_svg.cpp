#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <tuple>

#include "topictrack/format.hpp"
#include "topictrack/render.hpp"

namespace topictrack {

std::string_view svg_color(std::string_view token) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 12> palette{{
      {"tes-1", "#c6dbef"},
      {"tes-2", "#9ecae1"},
      {"tes-3", "#6baed6"},
      {"tes-4", "#3182bd"},
      {"tes-5", "#08519c"},
      {"root", "#bdbdbd"},
      {"green", "#2ca02c"},
      {"purple", "#9467bd"},
      {"orange", "#ff7f0e"},
      {"blue", "#1f77b4"},
      {"red", "#d62728"},
      {"none", "#ffffff"},
  }};
  for (const auto& [name, hex] : palette)
    if (name == token) return hex;
  return "#000000";
}

namespace {

std::string num(double v) { return format_fixed(v, 2); }

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default:
        // Control characters are not allowed in XML 1.0 text.
        if (static_cast<unsigned char>(c) < 0x20 && c != '\t' && c != '\n' && c != '\r')
          out += ' ';
        else
          out += c;
    }
  }
  return out;
}

constexpr std::array<std::string_view, 5> kTesTokens{"tes-1", "tes-2", "tes-3", "tes-4", "tes-5"};
constexpr std::array<std::string_view, 5> kTesRanges{"[0, 0.2)", "[0.2, 0.4)", "[0.4, 0.6)", "[0.6, 0.8)",
                                                     "[0.8, 1]"};
constexpr std::string_view kInk = "#333333";

void write_defs(std::ostringstream& out) {
  out << "<defs>\n";
  auto marker = [&out](std::string_view token) {
    out << "<marker id=\"arrow-" << token
        << "\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
           "orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\""
        << svg_color(token) << "\"/></marker>\n";
  };
  for (std::string_view token : kTesTokens) marker(token);
  marker("root");
  out << "</defs>\n";
}

void write_axes(std::ostringstream& out, const TetLayout& layout) {
  const PlotArea& p = layout.plot;
  out << "<g id=\"axes\" stroke=\"" << kInk << "\">\n";
  out << "<line class=\"x-axis\" x1=\"" << num(p.left) << "\" y1=\"" << num(p.bottom) << "\" x2=\"" << num(p.right)
      << "\" y2=\"" << num(p.bottom) << "\"/>\n";
  out << "<line class=\"y-axis\" x1=\"" << num(p.left) << "\" y1=\"" << num(p.top) << "\" x2=\"" << num(p.left)
      << "\" y2=\"" << num(p.bottom) << "\"/>\n";
  for (const auto& [year, x] : layout.ticks.x) {
    out << "<g class=\"x-tick\"><line x1=\"" << num(x) << "\" y1=\"" << num(p.bottom) << "\" x2=\"" << num(x)
        << "\" y2=\"" << num(p.bottom + 5) << "\"/><line class=\"grid\" x1=\"" << num(x) << "\" y1=\""
        << num(p.top) << "\" x2=\"" << num(x) << "\" y2=\"" << num(p.bottom)
        << "\" stroke=\"#e0e0e0\" stroke-dasharray=\"2,3\"/><text x=\"" << num(x) << "\" y=\""
        << num(p.bottom + 20) << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"" << kInk << "\">" << year
        << "</text></g>\n";
  }
  for (const auto& [value, y] : layout.ticks.y) {
    out << "<g class=\"y-tick\"><line x1=\"" << num(p.left - 5) << "\" y1=\"" << num(y) << "\" x2=\""
        << num(p.left) << "\" y2=\"" << num(y) << "\"/><text x=\"" << num(p.left - 8) << "\" y=\"" << num(y + 4)
        << "\" text-anchor=\"end\" stroke=\"none\" fill=\"" << kInk << "\">" << format_shortest(value)
        << "</text></g>\n";
  }
  const double mid_x = 0.5 * (p.left + p.right);
  const double mid_y = 0.5 * (p.top + p.bottom);
  out << "<text class=\"axis-title\" x=\"" << num(mid_x) << "\" y=\"" << num(p.bottom + 42)
      << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"" << kInk << "\">Year</text>\n";
  out << "<text class=\"axis-title\" x=\"" << num(p.left - 45) << "\" y=\"" << num(mid_y)
      << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"" << kInk << "\" transform=\"rotate(-90 "
      << num(p.left - 45) << " " << num(mid_y) << ")\">Topic importance</text>\n";
  out << "</g>\n";
}

std::string node_name(const Tet& tet, TopicIndex index) {
  return index == kRootIndex ? std::string("root") : tet.profile.by_index(index).display_label();
}

void write_edges(std::ostringstream& out, const Tet& tet, const TetLayout& layout) {
  out << "<g id=\"edges\" fill=\"none\">\n";
  for (const TetEdge& e : tet.edges) {
    const auto from = layout.positions.find(e.from_index);
    const auto to = layout.positions.find(e.to_index);
    if (from == layout.positions.end() || to == layout.positions.end()) continue;  // hidden root

    const auto color_it = layout.edge_colors.find({e.from_index, e.to_index});
    const std::string token = color_it != layout.edge_colors.end() ? color_it->second : "root";

    const double dx = to->second.x - from->second.x;
    const double dy = to->second.y - from->second.y;
    const double len = std::hypot(dx, dy);
    const double r = layout.node_radius;
    Point a = from->second;
    Point b = to->second;
    if (len > 2 * r) {
      a = {a.x + dx / len * r, a.y + dy / len * r};
      b = {b.x - dx / len * r, b.y - dy / len * r};
    }
    out << "<path id=\"edge-" << e.from_index << '-' << e.to_index << "\" class=\"edge " << token << "\" d=\"M"
        << num(a.x) << ',' << num(a.y) << " L" << num(b.x) << ',' << num(b.y) << "\" stroke=\"" << svg_color(token)
        << "\" stroke-width=\"" << (e.from_root() ? "1" : "2") << '"'
        << (e.from_root() ? " stroke-dasharray=\"4,3\"" : "") << " marker-end=\"url(#arrow-" << token
        << ")\"><title>" << xml_escape(node_name(tet, e.from_index)) << " -&gt; "
        << xml_escape(node_name(tet, e.to_index));
    if (!e.from_root()) out << ": " << format_shortest(e.tes);
    out << "</title></path>\n";
  }
  out << "</g>\n";
}

void write_nodes(std::ostringstream& out, const Tet& tet, const TetLayout& layout, const SvgOptions& options) {
  const double r = layout.node_radius;
  out << "<g id=\"nodes\">\n";
  if (const auto root = layout.positions.find(kRootIndex); root != layout.positions.end()) {
    const Point& c = root->second;
    out << "<g id=\"node--1\" class=\"node root\"><circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y)
        << "\" r=\"" << num(0.5 * r) << "\" fill=\"" << svg_color("root") << "\" stroke=\"" << kInk
        << "\"/><title>root</title></g>\n";
  }
  for (const TopicRecord& t : tet.profile.topics()) {
    const auto pos = layout.positions.find(t.index);
    if (pos == layout.positions.end()) continue;
    const Point& c = pos->second;
    std::string left = "none";
    std::string right = "none";
    if (const auto colors = layout.node_colors.find(t.index); colors != layout.node_colors.end())
      std::tie(left, right) = colors->second;

    const std::string top = num(c.x) + ',' + num(c.y - r);
    const std::string bottom = num(c.x) + ',' + num(c.y + r);
    const std::string arc = "A" + num(r) + ',' + num(r) + " 0 0,";
    out << "<g id=\"node-" << t.index << "\" class=\"node\">";
    out << "<path class=\"emerging\" d=\"M" << top << ' ' << arc << "0 " << bottom << " Z\" fill=\""
        << svg_color(left) << "\"/>";
    out << "<path class=\"evolving\" d=\"M" << top << ' ' << arc << "1 " << bottom << " Z\" fill=\""
        << svg_color(right) << "\"/>";
    out << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(r) << "\" fill=\"none\" stroke=\""
        << kInk << "\"/>";
    if (const auto anchor = layout.label_anchors.find(t.index); anchor != layout.label_anchors.end()) {
      const Box& box = anchor->second.box;
      out << "<text x=\"" << num(box.left + 0.5 * box.width) << "\" y=\"" << num(box.bottom() - 0.2 * box.height)
          << "\" text-anchor=\"middle\" font-family=\"" << xml_escape(options.font_family) << "\" font-size=\""
          << num(box.height) << "\">" << xml_escape(t.display_label()) << "</text>";
    }
    out << "<title>" << xml_escape(t.display_label()) << " (" << xml_escape(t.id) << ", " << t.year
        << ", weight " << format_shortest(t.weight) << ')';
    if (tet.classified()) {
      const NodeStates& s = tet.states_of(t.index);
      out << ": " << to_string(s.emerging) << ", " << to_string(s.evolving);
    }
    out << "</title></g>\n";
  }
  out << "</g>\n";
}

void write_legends(std::ostringstream& out, const TetLayout& layout) {
  const double x = layout.plot.right + 30;
  double y = layout.plot.top + 10;
  out << "<g id=\"legend-states\">\n<text x=\"" << num(x) << "\" y=\"" << num(y)
      << "\" font-weight=\"bold\">Evolution states</text>\n";
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 6> states{{
      {"born", "green"},
      {"fused", "purple"},
      {"reborn", "orange"},
      {"split", "blue"},
      {"dead", "red"},
      {"flourishing", "none"},
  }};
  for (const auto& [name, token] : states) {
    y += 20;
    out << "<g class=\"legend-entry\"><circle cx=\"" << num(x + 6) << "\" cy=\"" << num(y - 4)
        << "\" r=\"6\" fill=\"" << svg_color(token) << "\" stroke=\"" << kInk << "\"/><text x=\"" << num(x + 18)
        << "\" y=\"" << num(y) << "\">" << name << "</text></g>\n";
  }
  out << "<text x=\"" << num(x) << "\" y=\"" << num(y + 20) << "\" font-size=\"10\">left half: emerging</text>\n";
  out << "<text x=\"" << num(x) << "\" y=\"" << num(y + 33) << "\" font-size=\"10\">right half: evolving</text>\n</g>\n";

  y += 68;
  out << "<g id=\"legend-strength\">\n<text x=\"" << num(x) << "\" y=\"" << num(y)
      << "\" font-weight=\"bold\">Evolutionary strength</text>\n";
  for (std::size_t i = kTesTokens.size(); i-- > 0;) {
    y += 20;
    out << "<g class=\"legend-entry\"><line x1=\"" << num(x) << "\" y1=\"" << num(y - 4) << "\" x2=\""
        << num(x + 24) << "\" y2=\"" << num(y - 4) << "\" stroke=\"" << svg_color(kTesTokens[i])
        << "\" stroke-width=\"3\"/><text x=\"" << num(x + 32) << "\" y=\"" << num(y) << "\">" << kTesRanges[i]
        << "</text></g>\n";
  }
  out << "</g>\n";
}

}  // namespace

std::string to_svg(const Tet& tet, const TetLayout& layout, const SvgOptions& options) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(layout.width) << "\" height=\""
      << num(layout.height) << "\" viewBox=\"0 0 " << num(layout.width) << ' ' << num(layout.height)
      << "\" font-family=\"" << xml_escape(options.font_family) << "\" font-size=\"12\">\n";
  write_defs(out);
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(layout.width) << "\" height=\"" << num(layout.height)
      << "\" fill=\"#ffffff\"/>\n";
  write_axes(out, layout);
  write_edges(out, tet, layout);
  write_nodes(out, tet, layout, options);
  if (options.legends) write_legends(out, layout);
  out << "</svg>\n";
  return out.str();
}

}  // namespace topictrack
