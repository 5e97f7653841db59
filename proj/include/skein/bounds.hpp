#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skein/braid.hpp"
#include "skein/diagram.hpp"
#include "skein/homfly.hpp"
#include "skein/laurent_poly.hpp"
#include "skein/moves.hpp"
#include "skein/recognize.hpp"

namespace skein {

/// 2g + r - 1. The genus is supplied by the caller.
inline int genus_lower_bound(int genus, int components) {
  if (genus < 0) throw std::invalid_argument("genus must be non-negative");
  if (components < 1) throw std::invalid_argument("component count must be positive");
  return 2 * genus + components - 1;
}

/// Crossing count of the simplified diagram, minus one.
inline int crossing_upper_bound(const OrientedDiagram& d) {
  const OrientedDiagram s = simplify(d);
  if (s.is_crossingless())
    throw std::invalid_argument("crossing bound is undefined for a trivial diagram (td = 0)");
  return s.crossing_count() - 1;
}

/// z-degree of HOMFLY-PT, floored at 1 once the polynomial differs from the
/// unlink value. Without that certificate the floor is 0.
inline int homfly_lower_bound(const LaurentPoly2& p, int components) {
  if (p == unlink_polynomial(components)) return std::max(0, z_degree(p));
  return std::max(1, z_degree(p));
}

inline int homfly_lower_bound(const OrientedDiagram& d, HomflyEngine& engine) {
  return homfly_lower_bound(engine.compute(d), component_count(d));
}

inline int homfly_lower_bound(const OrientedDiagram& d) {
  return homfly_lower_bound(d, default_homfly_engine());
}

/// Polynomials reachable by skein trees of bounded depth.
///
/// level(k, r) holds every HOMFLY-PT value of an r-component link whose skein
/// tree depth is at most k: the unlink value at level 0, and at level k the
/// values a^2 p + a z q (positive root) and a^-2 p - a^-1 z q (negative root)
/// with p in level(k-1, r) and q in level(k-1, r +- 1). A polynomial outside
/// level(k, r) certifies td > k.
class SkeinReach {
 public:
  explicit SkeinReach(int max_level = 2) : max_level_(max_level) {}

  int max_level() const { return max_level_; }

  /// Smallest k <= max_level with p in level(k, r); max_level + 1 if none.
  int lower_bound(const LaurentPoly2& p, int components) {
    for (int k = 0; k <= max_level_; ++k)
      if (contains(k, components, p)) return k;
    return max_level_ + 1;
  }

  bool contains(int k, int components, const LaurentPoly2& p) {
    std::lock_guard lock(mu_);
    return level(k, components).count(p) > 0;
  }

  std::size_t level_size(int k, int components) {
    std::lock_guard lock(mu_);
    return level(k, components).size();
  }

 private:
  const std::set<LaurentPoly2>& level(int k, int r) {
    const auto key = std::make_pair(k, r);
    if (auto it = levels_.find(key); it != levels_.end()) return it->second;
    std::set<LaurentPoly2> out;
    if (k == 0) {
      out.insert(unlink_polynomial(r));
    } else {
      out = level(k - 1, r);
      std::vector<LaurentPoly2> switched(level(k - 1, r).begin(), level(k - 1, r).end());
      std::vector<LaurentPoly2> smoothed;
      for (int s : {r - 1, r + 1}) {
        if (s < 1) continue;
        const auto& lv = level(k - 1, s);
        smoothed.insert(smoothed.end(), lv.begin(), lv.end());
      }
      for (const LaurentPoly2& p : switched) {
        const LaurentPoly2 pos = p.shifted(1, 2, 0);
        const LaurentPoly2 neg = p.shifted(1, -2, 0);
        for (const LaurentPoly2& q : smoothed) {
          out.insert(pos + q.shifted(1, 1, 1));
          out.insert(neg - q.shifted(1, -1, 1));
        }
      }
    }
    return levels_.emplace(key, std::move(out)).first->second;
  }

  int max_level_;
  std::mutex mu_;
  std::map<std::pair<int, int>, std::set<LaurentPoly2>> levels_;
};

inline SkeinReach& default_skein_reach() {
  static SkeinReach reach;
  return reach;
}

struct BoundContribution {
  enum class Side { Lower, Upper };
  std::string name;
  int value = 0;
  Side side = Side::Lower;
  std::string source;
};

struct BoundsReport {
  int lower = 0;
  int upper = 0;
  std::vector<BoundContribution> contributions;
  std::vector<std::string> warnings;

  /// name, lower, upper, comma-joined contributions (`name>=v` or `name<=v`).
  std::string to_tsv_row(const std::string& name) const {
    std::string out = name + "\t" + std::to_string(lower) + "\t" + std::to_string(upper) + "\t";
    for (std::size_t i = 0; i < contributions.size(); ++i) {
      const auto& c = contributions[i];
      if (i) out += ",";
      out += c.name + (c.side == BoundContribution::Side::Lower ? ">=" : "<=") +
             std::to_string(c.value);
    }
    return out;
  }
};

namespace detail {

/// A supplied braid word must close to the diagram's link or its mirror, as
/// far as HOMFLY-PT can tell.
inline void check_braid_matches(const BraidWord& w, const LaurentPoly2& p, HomflyEngine& engine) {
  const LaurentPoly2 q = engine.compute(braid_closure(w));
  if (q != p && q.mirrored() != p)
    throw InputError("braid word '" + w.to_string() +
                     "' does not close to this link (HOMFLY-PT mismatch)");
}

}  // namespace detail

struct BoundsOptions {
  std::optional<int> genus;
  std::vector<BraidWord> braid_words;
};

/// Every lower and upper bound available for the diagram's link.
inline BoundsReport aggregate_bounds(const OrientedDiagram& d, const BoundsOptions& options,
                                     HomflyEngine& engine, SkeinReach& reach) {
  using Side = BoundContribution::Side;
  BoundsReport report;
  const int r = component_count(d);
  const UnlinkVerdict verdict = recognize_unlink(d, engine);
  if (verdict.is_unlink()) {
    report.contributions.push_back({"unlink", 0, Side::Upper, "crossingless diagram reached"});
    return report;
  }
  const LaurentPoly2 p = engine.compute(d);
  auto add = [&](std::string name, int value, Side side, std::string source) {
    report.contributions.push_back({std::move(name), value, side, std::move(source)});
  };

  add("homfly_z_degree", homfly_lower_bound(p, r), Side::Lower, "top z-degree of HOMFLY-PT");
  if (p != unlink_polynomial(r)) {
    add("conway_breadth", conway_breadth(p), Side::Lower, "top degree of the Conway polynomial");
    add("skein_reach", reach.lower_bound(p, r), Side::Lower,
        "HOMFLY-PT outside every shallower skein tree");
  }
  if (options.genus) add("genus", genus_lower_bound(*options.genus, r), Side::Lower, "2g + r - 1");

  add("crossing_count", crossing_upper_bound(d), Side::Upper, "c - 1 on the simplified diagram");
  if (!options.braid_words.empty()) {
    for (const BraidWord& w : options.braid_words) detail::check_braid_matches(w, p, engine);
    std::vector<BraidWord> connected;
    for (const BraidWord& w : options.braid_words)
      if (braid_stats(w).all_indices_used) connected.push_back(w);
    if (connected.size() < options.braid_words.size())
      report.warnings.push_back("braid words with an unused generator were ignored");
    if (!connected.empty()) {
      report.warnings.push_back("braid closures are assumed non-split (diagram is connected)");
      add("mixed_braid", mixed_braid_upper(connected), Side::Upper,
          "c - s + 1 + min(c+, c-) over supplied words");
      for (const BraidWord& w : connected)
        if (is_homogeneous_connected(w))
          add("homogeneous_braid", positive_braid_td(w), Side::Upper,
              "k - p + 1 for a positive or negative word");
    }
  }

  report.lower = 0;
  report.upper = std::numeric_limits<int>::max();
  for (const auto& c : report.contributions) {
    if (c.side == Side::Lower) report.lower = std::max(report.lower, c.value);
    else report.upper = std::min(report.upper, c.value);
  }
  return report;
}

inline BoundsReport aggregate_bounds(const OrientedDiagram& d, const BoundsOptions& options = {}) {
  return aggregate_bounds(d, options, default_homfly_engine(), default_skein_reach());
}

}  // namespace skein
