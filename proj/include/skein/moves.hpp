#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skein/diagram.hpp"

namespace skein {

namespace detail {

inline void check_index(const OrientedDiagram& d, int i) {
  if (i < 0 || i >= d.crossing_count())
    throw std::out_of_range("crossing index " + std::to_string(i) + " out of range 0.." +
                            std::to_string(d.crossing_count() - 1));
}

/// Deletes crossings and splices arcs. Arcs joined through a deleted
/// crossing merge into one; merged cycles that no longer touch any crossing
/// become free loops.
class Splicer {
 public:
  explicit Splicer(const OrientedDiagram& d)
      : crossings_(d.crossings()),
        removed_(d.crossings().size(), false),
        parent_(d.arc_count() + 1),
        free_loops_(d.free_loops()) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::vector<Crossing>& crossings() { return crossings_; }

  void join(int a, int b) { parent_[find(a)] = find(b); }
  void remove(int x) { removed_[x] = true; }

  /// Straight-through deletion: each strand continues past the crossing.
  void dissolve(int x) {
    const Passages p(crossings_[x]);
    join(p.under_in, p.under_out);
    join(p.over_in, p.over_out);
    remove(x);
  }

  OrientedDiagram finish() {
    std::vector<Crossing> kept;
    std::vector<char> present(parent_.size(), 0);
    for (std::size_t x = 0; x < crossings_.size(); ++x) {
      if (removed_[x]) continue;
      Crossing c = crossings_[x];
      for (int& a : c.arcs) {
        a = find(a);
        present[a] = 1;
      }
      kept.push_back(c);
    }
    int loops = free_loops_;
    std::vector<char> counted(parent_.size(), 0);
    for (int a = 1; a < static_cast<int>(parent_.size()); ++a) {
      const int r = find(a);
      if (!present[r] && !counted[r]) {
        counted[r] = 1;
        ++loops;
      }
    }
    return OrientedDiagram::from_crossings(kept, loops);
  }

 private:
  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  std::vector<Crossing> crossings_;
  std::vector<bool> removed_;
  std::vector<int> parent_;
  int free_loops_;
};

/// Crossing role of the arc end at `slot`: over (odd slots) or under.
inline bool over_at(int slot) { return Crossing::slot_is_over(slot); }

}  // namespace detail

/// Exchanges over and under at crossing i (L+ <-> L-). Labels are kept.
inline OrientedDiagram switch_crossing(const OrientedDiagram& d, int i) {
  detail::check_index(d, i);
  std::vector<Crossing> xs = d.crossings();
  const Passages p(xs[i]);
  xs[i] = Crossing::from_strands(p.over_in, p.over_out, p.under_in, p.under_out, -p.sign);
  return OrientedDiagram::from_normalized(std::move(xs), d.free_loops());
}

/// Oriented smoothing L0 at crossing i: incoming-under joins outgoing-over
/// and incoming-over joins outgoing-under.
inline OrientedDiagram smooth_crossing(const OrientedDiagram& d, int i) {
  detail::check_index(d, i);
  detail::Splicer sp(d);
  const Passages p(d.crossings()[i]);
  sp.join(p.under_in, p.over_out);
  sp.join(p.over_in, p.under_out);
  sp.remove(i);
  return sp.finish();
}

// ---------------------------------------------------------------------------
// Reducing moves.

/// Sides of a nugatory crossing: the crossings hanging off one pair of
/// adjacent slots. Empty when the crossing is not nugatory.
struct NugatorySplit {
  int crossing = -1;
  std::vector<int> side;  // crossings to flip; may be empty (a kink)
};

/// Finds a nugatory crossing: one that some face meets at two corners, so
/// that deleting it disconnects the diagram (or it closes a kink).
inline std::optional<NugatorySplit> find_nugatory(const OrientedDiagram& d, const ArcTopology& topo,
                                                  const Faces& faces) {
  const int n = d.crossing_count();
  std::vector<int> stamp(n, -1);
  int candidate = -1;
  for (int f = 0; f < static_cast<int>(faces.faces.size()) && candidate < 0; ++f) {
    for (int dart : faces.faces[f]) {
      const int x = dart / 4;
      if (stamp[x] == f) {
        candidate = x;
        break;
      }
      stamp[x] = f;
    }
  }
  if (candidate < 0) return std::nullopt;

  // Regions (crossing sets) reached through the four slots.
  std::vector<int> region(n, -1);
  std::vector<std::vector<int>> regions;
  for (int s = 0; s < 4; ++s) {
    const auto far = topo.partner(d, candidate, s);
    if (far.crossing == candidate) continue;  // kink loop
    if (region[far.crossing] < 0) {
      const int id = static_cast<int>(regions.size());
      std::vector<int> members{far.crossing};
      region[far.crossing] = id;
      for (std::size_t k = 0; k < members.size(); ++k) {
        for (int t = 0; t < 4; ++t) {
          const int y = topo.partner(d, members[k], t).crossing;
          if (y != candidate && region[y] < 0) {
            region[y] = id;
            members.push_back(y);
          }
        }
      }
      regions.push_back(std::move(members));
    }
  }
  NugatorySplit split;
  split.crossing = candidate;
  if (regions.size() < 2) return split;  // kink: the other side is a bare loop
  const auto& smaller = regions[0].size() <= regions[1].size() ? regions[0] : regions[1];
  split.side = smaller;
  return split;
}

/// Removes a nugatory crossing by turning one side over (a half rotation
/// about an axis in the projection plane) and straightening the strands.
inline OrientedDiagram remove_nugatory(const OrientedDiagram& d, const NugatorySplit& split) {
  detail::Splicer sp(d);
  for (int y : split.side) {
    const Passages p(sp.crossings()[y]);
    sp.crossings()[y] =
        Crossing::from_strands(p.over_in, p.over_out, p.under_in, p.under_out, p.sign);
  }
  sp.dissolve(split.crossing);
  return sp.finish();
}

/// A bigon face whose one strand is over at both corners.
struct Bigon {
  int first = -1;
  int second = -1;
};

inline std::optional<Bigon> find_r2_bigon(const OrientedDiagram& d, const ArcTopology& topo,
                                          const Faces& faces) {
  for (const auto& face : faces.faces) {
    if (face.size() != 2) continue;
    const int u = face[0] / 4;
    const int v = face[1] / 4;
    if (u == v) continue;
    // Arc leaving dart face[0] runs from u to v.
    const int slot_u = face[0] % 4;
    const auto far = topo.partner(d, u, slot_u);
    if (detail::over_at(slot_u) == detail::over_at(far.slot)) return Bigon{u, v};
  }
  return std::nullopt;
}

inline OrientedDiagram remove_r2(const OrientedDiagram& d, const Bigon& b) {
  detail::Splicer sp(d);
  sp.dissolve(b.first);
  sp.dissolve(b.second);
  return sp.finish();
}

/// Applies kink, nugatory and cancelling-bigon removals until none applies.
inline OrientedDiagram simplify(const OrientedDiagram& d) {
  OrientedDiagram cur = OrientedDiagram::from_crossings(d.crossings(), d.free_loops());
  while (!cur.is_crossingless()) {
    ArcTopology topo(cur);
    Faces faces(cur, topo);
    if (auto nug = find_nugatory(cur, topo, faces)) {
      cur = remove_nugatory(cur, *nug);
      continue;
    }
    if (auto bigon = find_r2_bigon(cur, topo, faces)) {
      cur = remove_r2(cur, *bigon);
      continue;
    }
    break;
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Non-reducing moves used by the bounded unlink search.

/// Every Reidemeister III move available on a triangular face whose strands
/// do not alternate.
inline std::vector<OrientedDiagram> r3_neighbours(const OrientedDiagram& d) {
  std::vector<OrientedDiagram> out;
  if (d.crossing_count() < 3) return out;
  ArcTopology topo(d);
  Faces faces(d, topo);
  for (const auto& face : faces.faces) {
    if (face.size() != 3) continue;
    std::array<int, 3> xs{face[0] / 4, face[1] / 4, face[2] / 4};
    if (xs[0] == xs[1] || xs[1] == xs[2] || xs[0] == xs[2]) continue;

    // Triangle arcs, each leaving the corner dart face[k].
    std::array<int, 3> tri{};
    bool non_alternating = false;
    for (int k = 0; k < 3; ++k) {
      const int x = face[k] / 4;
      const int s = face[k] % 4;
      tri[k] = d.crossings()[x].arcs[s];
      const auto far = topo.partner(d, x, s);
      if (detail::over_at(s) == detail::over_at(far.slot)) non_alternating = true;
    }
    if (!non_alternating) continue;
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) continue;

    std::vector<Passages> ps;
    ps.reserve(d.crossings().size());
    for (const Crossing& c : d.crossings()) ps.emplace_back(c);
    std::vector<Passages> updated = ps;
    // Each triangle arc e runs p -> q along a strand ext_in -> p -> e -> q ->
    // ext_out; afterwards the strand meets q first: ext_in -> q -> e -> p -> ext_out.
    for (int e : tri) {
      const auto h = topo.head[e];
      const auto t = topo.tail[e];
      const bool over_q = detail::over_at(h.slot);
      const bool over_p = detail::over_at(t.slot);
      const int ext_in = over_p ? ps[t.crossing].over_in : ps[t.crossing].under_in;
      const int ext_out = over_q ? ps[h.crossing].over_out : ps[h.crossing].under_out;
      auto& q = updated[h.crossing];
      auto& p = updated[t.crossing];
      if (over_q) {
        q.over_in = ext_in;
        q.over_out = e;
      } else {
        q.under_in = ext_in;
        q.under_out = e;
      }
      if (over_p) {
        p.over_in = e;
        p.over_out = ext_out;
      } else {
        p.under_in = e;
        p.under_out = ext_out;
      }
    }
    std::vector<Crossing> next;
    next.reserve(updated.size());
    for (const auto& p : updated) next.push_back(p.to_crossing());
    OrientedDiagram moved = OrientedDiagram::from_crossings(next, d.free_loops());
    if (is_planar(moved)) out.push_back(std::move(moved));
  }
  return out;
}

/// Reidemeister I: a curl on `arc`, or on a free loop when `arc` is 0. The
/// strand passes the new crossing first over when `over_first`, and `sign`
/// picks which side the curl lies on.
inline OrientedDiagram add_kink(const OrientedDiagram& d, int arc, bool over_first, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("kink sign must be +1 or -1");
  std::vector<Crossing> xs = d.crossings();
  int loops = d.free_loops();
  int in = 0, mid = 0, out = 0;
  if (arc == 0) {
    if (loops == 0) throw std::invalid_argument("no free loop to kink");
    --loops;
    in = out = d.arc_count() + 1;
    mid = d.arc_count() + 2;
  } else {
    if (arc < 1 || arc > d.arc_count())
      throw std::out_of_range("arc " + std::to_string(arc) + " out of range");
    ArcTopology topo(d);
    const auto h = topo.head[arc];
    in = arc;
    mid = d.arc_count() + 1;
    out = d.arc_count() + 2;
    xs[h.crossing].arcs[h.slot] = out;
  }
  xs.push_back(over_first ? Crossing::from_strands(mid, out, in, mid, sign)
                          : Crossing::from_strands(in, mid, mid, out, sign));
  return OrientedDiagram::from_crossings(xs, loops);
}

/// Every crossing-creating Reidemeister II move that pushes one arc of a
/// face across another arc of the same face.
inline std::vector<OrientedDiagram> r2_creation_neighbours(const OrientedDiagram& d) {
  std::vector<OrientedDiagram> out;
  if (d.is_crossingless()) return out;
  ArcTopology topo(d);
  Faces faces(d, topo);
  std::vector<Passages> base;
  base.reserve(d.crossings().size());
  for (const Crossing& c : d.crossings()) base.emplace_back(c);
  const int n = d.crossing_count();
  const int fresh = d.arc_count() + 1;

  for (const auto& face : faces.faces) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      for (std::size_t j = i + 1; j < face.size(); ++j) {
        const int e = d.crossings()[face[i] / 4].arcs[face[i] % 4];
        const int f = d.crossings()[face[j] / 4].arcs[face[j] % 4];
        if (e == f) continue;
        for (int e_over = 0; e_over < 2; ++e_over) {
          for (int f_first = 0; f_first < 2; ++f_first) {
            for (int sign : {+1, -1}) {
              std::vector<Passages> ps = base;
              const int e2 = fresh, e3 = fresh + 1, f2 = fresh + 2, f3 = fresh + 3;
              // Redirect the incoming ends of e and f to their new last pieces.
              auto redirect = [&](int arc, int replacement) {
                const auto h = topo.head[arc];
                if (detail::over_at(h.slot)) {
                  ps[h.crossing].over_in = replacement;
                } else {
                  ps[h.crossing].under_in = replacement;
                }
              };
              redirect(e, e3);
              redirect(f, f3);
              // e: e -> X1 -> e2 -> X2 -> e3;  f meets X1 first when f_first.
              std::array<std::pair<int, int>, 2> e_pass{{{e, e2}, {e2, e3}}};
              std::array<std::pair<int, int>, 2> f_pass{};
              if (f_first) {
                f_pass = {{{f, f2}, {f2, f3}}};
              } else {
                f_pass = {{{f2, f3}, {f, f2}}};
              }
              for (int k = 0; k < 2; ++k) {
                const auto [ei, eo] = e_pass[k];
                const auto [fi, fo] = f_pass[k];
                const int s = k == 0 ? sign : -sign;
                Crossing c = e_over ? Crossing::from_strands(fi, fo, ei, eo, s)
                                    : Crossing::from_strands(ei, eo, fi, fo, s);
                ps.emplace_back(c);
              }
              std::vector<Crossing> xs;
              xs.reserve(ps.size());
              for (const auto& p : ps) xs.push_back(p.to_crossing());
              OrientedDiagram norm = OrientedDiagram::from_crossings(xs, d.free_loops());
              if (!is_planar(norm)) continue;
              ArcTopology t2(norm);
              Faces f2faces(norm, t2);
              bool bigon = false;
              for (const auto& face2 : f2faces.faces) {
                if (face2.size() != 2) continue;
                const int a = face2[0] / 4, b = face2[1] / 4;
                if ((a == n && b == n + 1) || (a == n + 1 && b == n)) bigon = true;
              }
              if (bigon) out.push_back(std::move(norm));
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace skein
