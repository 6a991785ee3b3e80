#include <algorithm>
#include <sstream>

#include "topictrack/format.hpp"
#include "topictrack/render.hpp"

namespace topictrack {

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '\r') continue;
    out += c;
  }
  out += '"';
  return out;
}

std::string dot_node(TopicIndex index) { return index == kRootIndex ? "root" : "n" + std::to_string(index); }

}  // namespace

std::string to_dot(const Tet& tet, bool show_root) {
  std::ostringstream out;
  out << "digraph TET {\n";
  out << "  graph [rankdir=LR];\n";
  out << "  node [shape=circle];\n";
  if (show_root) out << "  root [label=\"root\", shape=point];\n";

  std::vector<const TopicRecord*> nodes;
  for (const TopicRecord& t : tet.profile.topics()) nodes.push_back(&t);
  std::sort(nodes.begin(), nodes.end(), [](const auto* a, const auto* b) { return a->index < b->index; });
  for (const TopicRecord* t : nodes) {
    out << "  " << dot_node(t->index) << " [topic_id=" << dot_quote(t->id) << ", label=" << dot_quote(t->display_label())
        << ", year=" << t->year << ", weight=" << format_shortest(t->weight);
    if (tet.classified()) {
      const NodeStates& s = tet.states_of(t->index);
      out << ", emerging_state=" << dot_quote(to_string(s.emerging))
          << ", evolving_state=" << dot_quote(to_string(s.evolving));
    }
    out << "];\n";
  }

  std::vector<TetEdge> edges = tet.edges;
  std::sort(edges.begin(), edges.end(), [](const TetEdge& a, const TetEdge& b) {
    return a.from_index != b.from_index ? a.from_index < b.from_index : a.to_index < b.to_index;
  });
  for (const TetEdge& e : edges) {
    if (e.from_root()) {
      if (show_root) out << "  root -> " << dot_node(e.to_index) << " [style=dashed];\n";
      continue;
    }
    out << "  " << dot_node(e.from_index) << " -> " << dot_node(e.to_index) << " [tes=" << format_shortest(e.tes)
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace topictrack
