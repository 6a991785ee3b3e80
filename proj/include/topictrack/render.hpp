#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "topictrack/layout.hpp"
#include "topictrack/model.hpp"

namespace topictrack {

struct SvgOptions {
  std::string font_family = "sans-serif";
  bool legends = true;
};

/// Static SVG 1.1 document. Stable element ids: node-<index> per topic
/// glyph group, edge-<from>-<to> per edge path (from = -1 for root edges,
/// drawn only when the layout shows the root), legend-states and
/// legend-strength for the two legends.
std::string to_svg(const Tet& tet, const TetLayout& layout, const SvgOptions& options = {});

/// Graphviz digraph; nodes n<index> in index order, edges sorted by
/// (from, to). The root is emitted as `root` only when requested.
std::string to_dot(const Tet& tet, bool show_root = false);

/// Canonical JSON document of a classified TET. Throws std::logic_error if
/// the TET has not been classified.
std::string to_json(const Tet& tet);

/// Thrown by from_json on malformed or inconsistent documents.
class TetFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inverse of to_json. Validates structure and every TET invariant.
Tet from_json(std::string_view text);

/// Hex colour used in SVG output for a colour token ("tes-3", "green", ...).
std::string_view svg_color(std::string_view token);

}  // namespace topictrack
