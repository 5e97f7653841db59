#pragma once

#include <cstddef>
#include <deque>
#include <unordered_set>

#include "skein/diagram.hpp"
#include "skein/homfly.hpp"
#include "skein/moves.hpp"

namespace skein {

enum class UnlinkStatus { Unlink, NotUnlink, Unknown };

struct UnlinkVerdict {
  UnlinkStatus status = UnlinkStatus::Unknown;
  int components = 0;  // set for Unlink

  bool is_unlink() const { return status == UnlinkStatus::Unlink; }
};

struct UnlinkSearchConfig {
  int extra_crossings = 2;         // crossing count may rise this far above the start
  std::size_t node_limit = 10'000;  // diagrams expanded before giving up
};

/// Three-valued unlink test.
///
/// Unlink(r) is reported only after reaching a crossingless diagram through
/// Reidemeister moves; NotUnlink only when the HOMFLY-PT value differs from
/// the r-component unlink. Everything else is Unknown.
inline UnlinkVerdict recognize_unlink(const OrientedDiagram& d, HomflyEngine& engine,
                                      const UnlinkSearchConfig& config = {}) {
  const int r = component_count(d);
  const OrientedDiagram start = simplify(d);
  if (start.is_crossingless()) return {UnlinkStatus::Unlink, r};
  if (engine.compute(start) != unlink_polynomial(r)) return {UnlinkStatus::NotUnlink, 0};

  const int max_crossings = start.crossing_count() + config.extra_crossings;
  std::deque<OrientedDiagram> queue;
  std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
  OrientedDiagram root = canonical_form(start);
  seen.insert(serialize_canonical(root));
  queue.push_back(std::move(root));
  std::size_t expanded = 0;
  while (!queue.empty() && expanded < config.node_limit) {
    const OrientedDiagram node = std::move(queue.front());
    queue.pop_front();
    ++expanded;
    std::vector<OrientedDiagram> next = r3_neighbours(node);
    if (node.crossing_count() + 2 <= max_crossings) {
      auto grown = r2_creation_neighbours(node);
      next.insert(next.end(), std::make_move_iterator(grown.begin()),
                  std::make_move_iterator(grown.end()));
    }
    for (const OrientedDiagram& candidate : next) {
      const OrientedDiagram reduced = simplify(candidate);
      if (reduced.is_crossingless()) return {UnlinkStatus::Unlink, r};
      if (reduced.crossing_count() > max_crossings) continue;
      OrientedDiagram canon = canonical_form(reduced);
      if (seen.insert(serialize_canonical(canon)).second) queue.push_back(std::move(canon));
    }
  }
  return {UnlinkStatus::Unknown, 0};
}

inline UnlinkVerdict recognize_unlink(const OrientedDiagram& d,
                                      const UnlinkSearchConfig& config = {}) {
  return recognize_unlink(d, default_homfly_engine(), config);
}

}  // namespace skein
