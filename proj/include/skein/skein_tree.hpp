#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <utility>

#include "skein/diagram.hpp"

namespace skein {

/// Binary skein tree. Node diagrams are simplified canonical forms; a branch
/// at crossing i has children simplify(switch(node, i)) and
/// simplify(smooth(node, i)), a leaf is an unlink of `components` loops.
struct SkeinTree {
  OrientedDiagram diagram;
  int crossing = -1;
  int components = 0;
  std::shared_ptr<const SkeinTree> switched;
  std::shared_ptr<const SkeinTree> smoothed;

  bool is_leaf() const { return crossing < 0; }

  int depth() const {
    if (is_leaf()) return 0;
    return 1 + std::max(switched->depth(), smoothed->depth());
  }

  std::size_t node_count() const {
    if (is_leaf()) return 1;
    return 1 + switched->node_count() + smoothed->node_count();
  }

  static std::shared_ptr<const SkeinTree> leaf(OrientedDiagram d, int components) {
    auto t = std::make_shared<SkeinTree>();
    t->diagram = std::move(d);
    t->components = components;
    return t;
  }

  static std::shared_ptr<const SkeinTree> branch(OrientedDiagram d, int crossing,
                                                 std::shared_ptr<const SkeinTree> sw,
                                                 std::shared_ptr<const SkeinTree> sm) {
    auto t = std::make_shared<SkeinTree>();
    t->diagram = std::move(d);
    t->crossing = crossing;
    t->switched = std::move(sw);
    t->smoothed = std::move(sm);
    return t;
  }
};

}  // namespace skein
