#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skein/bounds.hpp"
#include "skein/diagram.hpp"
#include "skein/homfly.hpp"
#include "skein/moves.hpp"
#include "skein/recognize.hpp"
#include "skein/skein_tree.hpp"

namespace skein {

enum class DepthVerdict { True, False, Unknown };

struct DepthResult {
  DepthVerdict verdict = DepthVerdict::Unknown;
  std::shared_ptr<const SkeinTree> witness;  // set when True
  std::uint64_t nodes = 0;
};

enum class TdStatus { Exact, Interval };

struct TdResult {
  int link_lower = 0;
  int diagram_upper = 0;
  std::shared_ptr<const SkeinTree> witness;
  bool budget_exhausted = false;
  BoundsReport bounds;

  TdStatus status() const {
    return link_lower == diagram_upper ? TdStatus::Exact : TdStatus::Interval;
  }
  bool exact() const { return status() == TdStatus::Exact; }

  /// "v" when exact, "[lo, hi]" otherwise.
  std::string render() const {
    if (exact()) return std::to_string(link_lower);
    return "[" + std::to_string(link_lower) + ", " + std::to_string(diagram_upper) + "]";
  }
};

struct SolverConfig {
  std::uint64_t node_budget = 5'000'000;  // per depth_at_most call
  std::optional<std::chrono::steady_clock::time_point> deadline;
  int max_depth = 64;
  UnlinkSearchConfig unlink;
};

/// Iterative-deepening search over skein resolutions of one diagram.
///
/// The memo maps each canonical code to an interval [lo, hi]: no tree of
/// depth below lo exists from that diagram, and a witness of depth hi is
/// stored. Both ends only tighten, so it stays valid across depth sweeps.
class Solver {
 public:
  explicit Solver(SolverConfig config = {})
      : Solver(default_homfly_engine(), default_skein_reach(), std::move(config)) {}

  Solver(HomflyEngine& engine, SkeinReach& reach, SolverConfig config = {})
      : engine_(engine), reach_(reach), config_(std::move(config)) {}

  const SolverConfig& config() const { return config_; }
  std::size_t memo_size() const { return memo_.size(); }

  DepthResult depth_at_most(const OrientedDiagram& d, int k) {
    if (k < 0) throw std::invalid_argument("depth must be non-negative");
    DepthResult out;
    nodes_ = 0;
    const OrientedDiagram root = canonical_form(simplify(d));
    const CanonicalCode code = serialize_canonical(root);
    try {
      if (search(root, code, k)) {
        out.verdict = DepthVerdict::True;
        out.witness = memo_.at(code).witness;
      } else {
        out.verdict = DepthVerdict::False;
      }
    } catch (const Exhausted&) {
      out.verdict = DepthVerdict::Unknown;
    }
    out.nodes = nodes_;
    return out;
  }

  /// Witness of depth at most k; throws when the search does not find one.
  SkeinTree extract_tree(const OrientedDiagram& d, int k) {
    DepthResult r = depth_at_most(d, k);
    if (r.verdict != DepthVerdict::True)
      throw std::runtime_error(std::string("no skein tree of depth <= ") + std::to_string(k) +
                               (r.verdict == DepthVerdict::Unknown ? " found within budget"
                                                                   : " exists for this diagram"));
    return *r.witness;
  }

  TdResult compute_td(const OrientedDiagram& d, const BoundsOptions& options = {}) {
    TdResult res;
    const OrientedDiagram root = canonical_form(simplify(d));
    if (root.is_crossingless()) {
      res.witness = SkeinTree::leaf(root, root.free_loops());
      res.bounds.contributions.push_back(
          {"unlink", 0, BoundContribution::Side::Upper, "crossingless diagram reached"});
      return res;
    }
    res.bounds = aggregate_bounds(d, options, engine_, reach_);
    res.link_lower = res.bounds.lower;
    res.diagram_upper = res.bounds.upper;
    if (res.diagram_upper == 0) {
      // recognised unlink that needed Reidemeister search
      DepthResult r = depth_at_most(root, 0);
      if (r.verdict == DepthVerdict::True) res.witness = r.witness;
      return res;
    }
    const int last = std::min(res.diagram_upper, config_.max_depth);
    for (int k = res.link_lower; k <= last; ++k) {
      DepthResult r = depth_at_most(root, k);
      if (r.verdict == DepthVerdict::True) {
        res.diagram_upper = r.witness->depth();
        res.witness = r.witness;
        break;
      }
      if (r.verdict == DepthVerdict::Unknown) {
        res.budget_exhausted = true;
        break;
      }
    }
    return res;
  }

 private:
  struct Exhausted {};

  struct Entry {
    bool initialized = false;
    int lo = 0;
    int hi = std::numeric_limits<int>::max();
    std::shared_ptr<const SkeinTree> witness;
  };

  struct Child {
    OrientedDiagram diagram;
    CanonicalCode code;
  };

  Child child_of(OrientedDiagram d) {
    Child c{canonical_form(simplify(d)), {}};
    c.code = serialize_canonical(c.diagram);
    return c;
  }

  void charge() {
    if (++nodes_ > config_.node_budget) throw Exhausted{};
    if (config_.deadline && (nodes_ & 0xff) == 0 &&
        std::chrono::steady_clock::now() > *config_.deadline)
      throw Exhausted{};
  }

  void initialize(const OrientedDiagram& d, Entry& e) {
    e.initialized = true;
    if (d.is_crossingless()) {
      e.lo = e.hi = 0;
      e.witness = SkeinTree::leaf(d, d.free_loops());
      return;
    }
    const int r = component_count(d);
    const LaurentPoly2 p = engine_.compute(d);
    if (p == unlink_polynomial(r)) {
      const UnlinkVerdict v = recognize_unlink(d, engine_, config_.unlink);
      if (v.is_unlink()) {
        e.lo = e.hi = 0;
        e.witness = SkeinTree::leaf(d, v.components);
      }
      return;
    }
    e.lo = std::max(homfly_lower_bound(p, r), reach_.lower_bound(p, r));
  }

  /// Crossing order: minority sign first, then crossings whose smoothing
  /// stays connected.
  std::vector<int> branch_order(const OrientedDiagram& d, const std::vector<Child>& smooths) {
    int positives = 0;
    for (const Crossing& x : d.crossings()) positives += x.sign > 0;
    const int negatives = d.crossing_count() - positives;
    const int minority = positives <= negatives ? +1 : -1;
    std::vector<std::pair<int, int>> keyed;
    for (int i = 0; i < d.crossing_count(); ++i) {
      int key = 0;
      if (d.crossings()[i].sign != minority || positives == negatives) key += 2;
      if (split_components(smooths[i].diagram).size() != 1) key += 1;
      keyed.emplace_back(key, i);
    }
    std::stable_sort(keyed.begin(), keyed.end());
    std::vector<int> order;
    for (auto [key, i] : keyed) order.push_back(i);
    return order;
  }

  bool search(const OrientedDiagram& d, const CanonicalCode& code, int k) {
    Entry& e = memo_[code];
    if (!e.initialized) {
      charge();
      initialize(d, e);
    }
    if (e.hi <= k) return true;
    if (e.lo > k || k == 0) {
      e.lo = std::max(e.lo, k + 1);
      return false;
    }
    charge();

    const int n = d.crossing_count();
    std::vector<Child> smooths, switches;
    smooths.reserve(n);
    switches.reserve(n);
    for (int i = 0; i < n; ++i) {
      smooths.push_back(child_of(smooth_crossing(d, i)));
      switches.push_back(child_of(switch_crossing(d, i)));
    }
    std::set<std::pair<CanonicalCode, CanonicalCode>> tried;
    for (int i : branch_order(d, smooths)) {
      if (!tried.emplace(switches[i].code, smooths[i].code).second) continue;
      if (!search(smooths[i].diagram, smooths[i].code, k - 1)) continue;
      if (!search(switches[i].diagram, switches[i].code, k - 1)) continue;
      // memo_ is node-based, so `e` is still valid after the recursive calls
      auto sw = memo_.at(switches[i].code).witness;
      auto sm = memo_.at(smooths[i].code).witness;
      e.witness = SkeinTree::branch(d, i, sw, sm);
      e.hi = e.witness->depth();
      return true;
    }
    e.lo = std::max(e.lo, k + 1);
    return false;
  }

  HomflyEngine& engine_;
  SkeinReach& reach_;
  SolverConfig config_;
  std::unordered_map<CanonicalCode, Entry, CanonicalCodeHash> memo_;
  std::uint64_t nodes_ = 0;
};

inline DepthResult depth_at_most(const OrientedDiagram& d, int k, std::uint64_t budget = 5'000'000) {
  SolverConfig cfg;
  cfg.node_budget = budget;
  Solver solver(cfg);
  return solver.depth_at_most(d, k);
}

inline SkeinTree extract_tree(const OrientedDiagram& d, int k, std::uint64_t budget = 5'000'000) {
  SolverConfig cfg;
  cfg.node_budget = budget;
  Solver solver(cfg);
  return solver.extract_tree(d, k);
}

inline TdResult compute_td(const OrientedDiagram& d, const BoundsOptions& options = {},
                           std::uint64_t budget = 5'000'000) {
  SolverConfig cfg;
  cfg.node_budget = budget;
  Solver solver(cfg);
  return solver.compute_td(d, options);
}

}  // namespace skein
