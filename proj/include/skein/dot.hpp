#pragma once

#include <string>

#include "skein/diagram.hpp"
#include "skein/skein_tree.hpp"

namespace skein {

namespace detail {

inline int emit_dot_node(const SkeinTree& t, int& next_id, std::string& out) {
  const int id = next_id++;
  std::string label = to_pd_text(t.diagram);
  if (t.is_leaf()) label += "\\nunlink(" + std::to_string(t.components) + ")";
  out += "  n" + std::to_string(id) + " [label=\"" + label + "\"";
  if (t.is_leaf()) out += ", shape=box";
  out += "];\n";
  if (!t.is_leaf()) {
    const int sw = emit_dot_node(*t.switched, next_id, out);
    const int sm = emit_dot_node(*t.smoothed, next_id, out);
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(sw) + " [label=\"±\"];\n";
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(sm) + " [label=\"0\"];\n";
  }
  return id;
}

}  // namespace detail

/// DOT digraph of a skein tree, nodes numbered in preorder with the switch
/// child first. Switch edges are labelled "±", smoothing edges "0".
inline std::string export_dot(const SkeinTree& tree) {
  std::string out = "digraph skein_tree {\n  node [fontname=\"monospace\"];\n";
  int next_id = 0;
  detail::emit_dot_node(tree, next_id, out);
  out += "}\n";
  return out;
}

}  // namespace skein
