#pragma once

#include <algorithm>
#include <string>

#include "skein/diagram.hpp"
#include "skein/homfly.hpp"
#include "skein/moves.hpp"
#include "skein/recognize.hpp"
#include "skein/skein_tree.hpp"

namespace skein {

struct TreeCheck {
  bool ok = true;
  std::string error;
  int depth = 0;

  explicit operator bool() const { return ok; }
};

namespace detail {

inline TreeCheck check_subtree(const SkeinTree& t, const CanonicalCode& expected,
                               HomflyEngine& engine, const std::string& path) {
  auto fail = [&](const std::string& why) { return TreeCheck{false, path + ": " + why, 0}; };
  if (canonical_code(t.diagram) != expected) return fail("node diagram does not match its parent's move");
  if (t.is_leaf()) {
    const UnlinkVerdict v = recognize_unlink(t.diagram, engine);
    if (!v.is_unlink()) return fail("leaf is not recognised as an unlink");
    if (v.components != t.components)
      return fail("leaf claims " + std::to_string(t.components) + " loops, found " +
                  std::to_string(v.components));
    return {};
  }
  if (t.crossing >= t.diagram.crossing_count()) return fail("crossing index out of range");
  if (!t.switched || !t.smoothed) return fail("branch is missing a child");
  const CanonicalCode sw = canonical_code(simplify(switch_crossing(t.diagram, t.crossing)));
  const CanonicalCode sm = canonical_code(simplify(smooth_crossing(t.diagram, t.crossing)));
  TreeCheck a = check_subtree(*t.switched, sw, engine, path + "/switch");
  if (!a) return a;
  TreeCheck b = check_subtree(*t.smoothed, sm, engine, path + "/smooth");
  if (!b) return b;
  return {true, "", 1 + std::max(a.depth, b.depth)};
}

}  // namespace detail

/// Replays every move of a skein tree from `root` and re-runs leaf
/// recognition. Shares no code with the search beyond the moves themselves.
inline TreeCheck verify_skein_tree(const OrientedDiagram& root, const SkeinTree& tree,
                                   HomflyEngine& engine) {
  return detail::check_subtree(tree, canonical_code(simplify(root)), engine, "root");
}

inline TreeCheck verify_skein_tree(const OrientedDiagram& root, const SkeinTree& tree) {
  return verify_skein_tree(root, tree, default_homfly_engine());
}

}  // namespace skein
