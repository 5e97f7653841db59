#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/laurent_poly.hpp"
#include "skein/moves.hpp"

namespace skein {

/// Thrown when a computation exceeds its configured node budget.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (a^-1 - a) z^-1, the value of the two-component unlink.
inline LaurentPoly2 unlink_factor() {
  return LaurentPoly2::monomial(1, -1, -1) - LaurentPoly2::monomial(1, 1, -1);
}

/// HOMFLY-PT value of the r-component unlink: ((a^-1 - a) z^-1)^(r-1).
inline LaurentPoly2 unlink_polynomial(int components) {
  if (components < 1) throw std::invalid_argument("unlink needs at least one component");
  return unlink_factor().pow(static_cast<unsigned>(components - 1));
}

/// First crossing met from below when every component is traversed from its
/// smallest arc label, components in label order; -1 for a descending
/// diagram.
inline int first_ascending_crossing(const OrientedDiagram& d) {
  ArcTopology topo(d);
  const int n = d.arc_count();
  std::vector<char> arc_seen(n + 1, 0);
  std::vector<char> crossing_seen(d.crossing_count(), 0);
  for (int start = 1; start <= n; ++start) {
    if (arc_seen[start]) continue;
    int arc = start;
    while (!arc_seen[arc]) {
      arc_seen[arc] = 1;
      const auto h = topo.head[arc];
      if (!crossing_seen[h.crossing]) {
        crossing_seen[h.crossing] = 1;
        if (h.slot == 0) return h.crossing;
      }
      arc = topo.next(d, arc);
    }
  }
  return -1;
}

/// HOMFLY-PT polynomial by skein recursion on ascending crossings, with a
/// memo keyed by canonical code.
///
/// Normalization: a^-1 P(L+) - a P(L-) = z P(L0), P(unknot) = 1. The memo
/// allows concurrent readers; concurrent misses may compute the same entry
/// twice, and the first insert wins.
class HomflyEngine {
 public:
  explicit HomflyEngine(std::uint64_t node_budget = 50'000'000) : budget_(node_budget) {}

  HomflyEngine(const HomflyEngine&) = delete;
  HomflyEngine& operator=(const HomflyEngine&) = delete;

  LaurentPoly2 compute(const OrientedDiagram& d) {
    std::uint64_t nodes = 0;
    return recurse(d, nodes);
  }

  std::optional<LaurentPoly2> lookup(const CanonicalCode& code) const {
    std::shared_lock lock(mu_);
    auto it = cache_.find(code);
    if (it == cache_.end()) return std::nullopt;
    return it->second;
  }

  void seed(const CanonicalCode& code, const LaurentPoly2& p) {
    std::unique_lock lock(mu_);
    cache_.try_emplace(code, p);
  }

  /// Number of memo misses (polynomials actually computed) so far.
  std::uint64_t computations() const { return computations_.load(); }
  std::size_t cache_size() const {
    std::shared_lock lock(mu_);
    return cache_.size();
  }
  void set_node_budget(std::uint64_t budget) { budget_ = budget; }

 private:
  LaurentPoly2 recurse(const OrientedDiagram& d, std::uint64_t& nodes) {
    const CanonicalCode code = canonical_code(d);
    if (auto hit = lookup(code)) return *hit;
    if (++nodes > budget_)
      throw ResourceLimitExceeded("HOMFLY-PT node budget of " + std::to_string(budget_) +
                                  " exceeded");
    ++computations_;

    LaurentPoly2 result;
    const OrientedDiagram reduced = simplify(d);
    if (reduced.crossing_count() < d.crossing_count()) {
      result = recurse(reduced, nodes);
    } else if (d.is_crossingless()) {
      result = unlink_polynomial(d.free_loops());
    } else {
      const int x = first_ascending_crossing(d);
      if (x < 0) {
        result = unlink_polynomial(component_count(d));
      } else {
        const LaurentPoly2 switched = recurse(switch_crossing(d, x), nodes);
        const LaurentPoly2 smoothed = recurse(smooth_crossing(d, x), nodes);
        if (d.crossings()[x].sign > 0) {
          // P(L+) = a^2 P(L-) + a z P(L0)
          result = switched.shifted(1, 2, 0) + smoothed.shifted(1, 1, 1);
        } else {
          // P(L-) = a^-2 P(L+) - a^-1 z P(L0)
          result = switched.shifted(1, -2, 0) - smoothed.shifted(1, -1, 1);
        }
      }
    }
    seed(code, result);
    return result;
  }

  mutable std::shared_mutex mu_;
  std::unordered_map<CanonicalCode, LaurentPoly2, CanonicalCodeHash> cache_;
  std::atomic<std::uint64_t> computations_{0};
  std::uint64_t budget_;
};

/// Process-wide engine used by the free functions below.
inline HomflyEngine& default_homfly_engine() {
  static HomflyEngine engine;
  return engine;
}

inline LaurentPoly2 homfly(const OrientedDiagram& d) { return default_homfly_engine().compute(d); }

/// Top z-degree of the Conway polynomial; 0 when it vanishes or is constant.
inline int conway_breadth(const LaurentPoly2& p) {
  return std::max(0, specialize_conway(p).degree());
}

inline int conway_breadth(const OrientedDiagram& d) { return conway_breadth(homfly(d)); }

}  // namespace skein
