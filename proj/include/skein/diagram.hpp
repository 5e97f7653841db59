#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skein {

/// Malformed user input (PD text, braid text, dataset rows).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One oriented crossing in PD form.
///
/// arcs = (a, b, c, d): a is the incoming under-arc, then b, c, d in
/// rotational order; c is the outgoing under-arc. The sign is +1 exactly
/// when the over-strand runs from b to d. Given the four strand ends and the
/// sign, the rotational order is fixed, so every constructor goes through
/// from_strands().
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  static Crossing from_strands(int under_in, int under_out, int over_in, int over_out, int sign) {
    Crossing x;
    x.sign = sign;
    if (sign > 0) {
      x.arcs = {under_in, over_in, under_out, over_out};
    } else {
      x.arcs = {under_in, over_out, under_out, over_in};
    }
    return x;
  }

  int under_in() const { return arcs[0]; }
  int under_out() const { return arcs[2]; }
  int over_in() const { return sign > 0 ? arcs[1] : arcs[3]; }
  int over_out() const { return sign > 0 ? arcs[3] : arcs[1]; }

  /// Whether the arc end sitting in `slot` points into the crossing.
  bool slot_is_incoming(int slot) const {
    return slot == 0 || (slot == 1 && sign > 0) || (slot == 3 && sign < 0);
  }
  static bool slot_is_over(int slot) { return (slot & 1) != 0; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Strand-level view of a crossing; the inverse of Crossing::from_strands.
struct Passages {
  int under_in, under_out, over_in, over_out, sign;

  explicit Passages(const Crossing& x)
      : under_in(x.under_in()),
        under_out(x.under_out()),
        over_in(x.over_in()),
        over_out(x.over_out()),
        sign(x.sign) {}

  Crossing to_crossing() const {
    return Crossing::from_strands(under_in, under_out, over_in, over_out, sign);
  }
};

/// Relabeling-invariant serialization of a diagram; the memo key.
struct CanonicalCode {
  std::string bytes;

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char ch : bytes) {
      out += kDigits[ch >> 4U];
      out += kDigits[ch & 15U];
    }
    return out;
  }

  static CanonicalCode from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw InputError("odd-length canonical code");
    auto nibble = [](char ch) -> int {
      if (ch >= '0' && ch <= '9') return ch - '0';
      if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
      throw InputError("bad hex digit in canonical code");
    };
    CanonicalCode code;
    for (std::size_t i = 0; i < hex.size(); i += 2)
      code.bytes += static_cast<char>((nibble(hex[i]) << 4) | nibble(hex[i + 1]));
    return code;
  }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};

/// Oriented link diagram: PD crossings plus crossingless unknotted loops.
///
/// Arc labels are 1..2c. Each label occurs in exactly two crossing slots,
/// once pointing in and once pointing out, and the labels of every link
/// component form one contiguous block increasing along the orientation.
class OrientedDiagram {
 public:
  OrientedDiagram() = default;

  static OrientedDiagram unlink(int components) {
    OrientedDiagram d;
    d.free_loops_ = components;
    return d;
  }

  /// Builds a diagram from crossings whose labels are arbitrary positive
  /// integers (each used once as an incoming and once as an outgoing end)
  /// and relabels arcs component by component along the orientation.
  static OrientedDiagram from_crossings(const std::vector<Crossing>& crossings, int free_loops);

  /// Wraps crossings whose labels already satisfy the class invariants.
  static OrientedDiagram from_normalized(std::vector<Crossing> crossings, int free_loops) {
    OrientedDiagram d;
    d.crossings_ = std::move(crossings);
    d.free_loops_ = free_loops;
    return d;
  }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(std::size_t i) const { return crossings_.at(i); }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return 2 * crossing_count(); }
  int free_loops() const { return free_loops_; }
  bool is_crossingless() const { return crossings_.empty(); }

  friend bool operator==(const OrientedDiagram&, const OrientedDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
};

// ---------------------------------------------------------------------------
// Arc topology derived from a diagram.

/// Per-arc incidence data: where each arc starts and ends.
struct ArcTopology {
  struct End {
    int crossing = -1;
    int slot = -1;
  };
  std::vector<End> head;  // indexed by label; the incoming end
  std::vector<End> tail;  // the outgoing end

  explicit ArcTopology(const OrientedDiagram& d) {
    const int n = d.arc_count();
    head.assign(n + 1, {});
    tail.assign(n + 1, {});
    for (int x = 0; x < d.crossing_count(); ++x) {
      const Crossing& c = d.crossings()[x];
      for (int s = 0; s < 4; ++s) {
        auto& slot_end = c.slot_is_incoming(s) ? head[c.arcs[s]] : tail[c.arcs[s]];
        slot_end = {x, s};
      }
    }
  }

  /// Arc following `arc` through its head crossing.
  int next(const OrientedDiagram& d, int arc) const {
    const End& h = head[arc];
    const Crossing& c = d.crossings()[h.crossing];
    return h.slot == 0 ? c.under_out() : c.over_out();
  }

  /// Slot holding the other end of the arc in (crossing, slot).
  End partner(const OrientedDiagram& d, int crossing, int slot) const {
    const Crossing& c = d.crossings()[crossing];
    return c.slot_is_incoming(slot) ? tail[c.arcs[slot]] : head[c.arcs[slot]];
  }
};

/// Face structure of the planar 4-valent map underlying a diagram.
///
/// Darts are (crossing, slot) pairs encoded as 4*crossing + slot. A face is
/// the cyclic dart sequence obtained by following an arc to its far end and
/// turning to the next slot in rotational order.
struct Faces {
  std::vector<std::vector<int>> faces;
  std::vector<int> face_of_dart;

  explicit Faces(const OrientedDiagram& d) : Faces(d, ArcTopology(d)) {}

  Faces(const OrientedDiagram& d, const ArcTopology& topo) {
    const int darts = 4 * d.crossing_count();
    face_of_dart.assign(darts, -1);
    for (int start = 0; start < darts; ++start) {
      if (face_of_dart[start] >= 0) continue;
      std::vector<int> face;
      int dart = start;
      const int id = static_cast<int>(faces.size());
      while (face_of_dart[dart] < 0) {
        face_of_dart[dart] = id;
        face.push_back(dart);
        auto far = topo.partner(d, dart / 4, dart % 4);
        dart = 4 * far.crossing + (far.slot + 1) % 4;
      }
      faces.push_back(std::move(face));
    }
  }
};

namespace detail {

/// Connected pieces of the crossing incidence graph, each a sorted list of
/// crossing indices, ordered by smallest member.
inline std::vector<std::vector<int>> crossing_pieces(const OrientedDiagram& d,
                                                     const ArcTopology& topo) {
  const int n = d.crossing_count();
  std::vector<int> piece(n, -1);
  std::vector<std::vector<int>> out;
  for (int root = 0; root < n; ++root) {
    if (piece[root] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> members{root};
    piece[root] = id;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const int x = members[k];
      for (int s = 0; s < 4; ++s) {
        const int y = topo.partner(d, x, s).crossing;
        if (piece[y] < 0) {
          piece[y] = id;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

/// Number of link components carried by crossings.
inline int crossing_component_count(const OrientedDiagram& d, const ArcTopology& topo) {
  const int n = d.arc_count();
  std::vector<char> seen(n + 1, 0);
  int comps = 0;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    ++comps;
    int arc = start;
    while (!seen[arc]) {
      seen[arc] = 1;
      arc = topo.next(d, arc);
    }
  }
  return comps;
}

inline void put_u16(std::string& out, int v) {
  out += static_cast<char>((v >> 8) & 0xff);
  out += static_cast<char>(v & 0xff);
}

}  // namespace detail

inline OrientedDiagram OrientedDiagram::from_crossings(const std::vector<Crossing>& crossings,
                                                       int free_loops) {
  // Old label -> (crossing, passage is over) for the incoming end.
  std::map<int, std::pair<int, bool>> head;
  for (int x = 0; x < static_cast<int>(crossings.size()); ++x) {
    const Passages p(crossings[x]);
    head[p.under_in] = {x, false};
    head[p.over_in] = {x, true};
  }
  auto next = [&](int arc) {
    const auto& [x, over] = head.at(arc);
    const Passages p(crossings[x]);
    return over ? p.over_out : p.under_out;
  };
  std::map<int, int> relabel;
  int fresh = 1;
  for (const auto& [start, unused] : head) {
    if (relabel.count(start)) continue;
    int arc = start;
    do {
      relabel[arc] = fresh++;
      arc = next(arc);
    } while (arc != start);
  }
  std::vector<Crossing> out;
  out.reserve(crossings.size());
  for (const Crossing& c : crossings) {
    const Passages p(c);
    out.push_back(Crossing::from_strands(relabel.at(p.under_in), relabel.at(p.under_out),
                                         relabel.at(p.over_in), relabel.at(p.over_out), p.sign));
  }
  return from_normalized(std::move(out), free_loops);
}

// ---------------------------------------------------------------------------
// Structural invariants.

inline int component_count(const OrientedDiagram& d) {
  if (d.is_crossingless()) return d.free_loops();
  return detail::crossing_component_count(d, ArcTopology(d)) + d.free_loops();
}

inline int writhe(const OrientedDiagram& d) {
  int w = 0;
  for (const Crossing& c : d.crossings()) w += c.sign;
  return w;
}

/// Component index (0-based, ordered by smallest label) of every arc label.
inline std::vector<int> arc_components(const OrientedDiagram& d) {
  ArcTopology topo(d);
  const int n = d.arc_count();
  std::vector<int> comp(n + 1, -1);
  int next_id = 0;
  for (int start = 1; start <= n; ++start) {
    if (comp[start] >= 0) continue;
    int arc = start;
    while (comp[arc] < 0) {
      comp[arc] = next_id;
      arc = topo.next(d, arc);
    }
    ++next_id;
  }
  return comp;
}

/// Euler characteristic check: each connected piece must be a sphere map.
inline bool is_planar(const OrientedDiagram& d) {
  if (d.is_crossingless()) return true;
  ArcTopology topo(d);
  Faces f(d, topo);
  const auto pieces = detail::crossing_pieces(d, topo);
  return static_cast<int>(f.faces.size()) ==
         d.crossing_count() + 2 * static_cast<int>(pieces.size());
}

/// Partitions a diagram into its connected pieces followed by one single
/// loop diagram per free loop.
inline std::vector<OrientedDiagram> split_components(const OrientedDiagram& d) {
  std::vector<OrientedDiagram> out;
  if (!d.is_crossingless()) {
    ArcTopology topo(d);
    for (const auto& piece : detail::crossing_pieces(d, topo)) {
      std::vector<Crossing> xs;
      xs.reserve(piece.size());
      for (int x : piece) xs.push_back(d.crossings()[x]);
      out.push_back(OrientedDiagram::from_crossings(xs, 0));
    }
  }
  for (int i = 0; i < d.free_loops(); ++i) out.push_back(OrientedDiagram::unlink(1));
  return out;
}

/// Exchanges over and under at every crossing; labels are kept.
inline OrientedDiagram mirror(const OrientedDiagram& d) {
  std::vector<Crossing> xs;
  xs.reserve(d.crossings().size());
  for (const Crossing& c : d.crossings()) {
    const Passages p(c);
    xs.push_back(Crossing::from_strands(p.over_in, p.over_out, p.under_in, p.under_out, -p.sign));
  }
  return OrientedDiagram::from_normalized(std::move(xs), d.free_loops());
}

/// Reverses the orientation of one component (index as in arc_components).
inline OrientedDiagram reverse_component(const OrientedDiagram& d, int component) {
  const auto comp = arc_components(d);
  std::vector<Crossing> xs;
  for (const Crossing& c : d.crossings()) {
    Passages p(c);
    const bool flip_under = comp[p.under_in] == component;
    const bool flip_over = comp[p.over_in] == component;
    if (flip_under) std::swap(p.under_in, p.under_out);
    if (flip_over) std::swap(p.over_in, p.over_out);
    if (flip_under != flip_over) p.sign = -p.sign;
    xs.push_back(p.to_crossing());
  }
  return OrientedDiagram::from_crossings(xs, d.free_loops());
}

// ---------------------------------------------------------------------------
// Canonical form.

namespace detail {

struct PieceLabeling {
  std::vector<int> code;                  // serialized sorted tuples
  std::vector<Crossing> crossings;        // relabeled, sorted by under_in
};

/// Labels one connected piece starting from `start_arc`: the starting
/// component is labeled along its orientation, then the remaining components
/// are started, in crossing-visit order, at the outgoing arc of the first
/// unlabeled strand met.
inline PieceLabeling label_piece(const OrientedDiagram& d, const ArcTopology& topo,
                                 const std::vector<int>& piece, int start_arc,
                                 std::vector<int>& scratch_label,
                                 std::vector<char>& scratch_seen) {
  std::vector<int> visit;
  visit.reserve(piece.size());
  int fresh = 1;
  auto label_component = [&](int first) {
    int arc = first;
    do {
      scratch_label[arc] = fresh++;
      const int x = topo.head[arc].crossing;
      if (!scratch_seen[x]) {
        scratch_seen[x] = 1;
        visit.push_back(x);
      }
      arc = topo.next(d, arc);
    } while (arc != first);
  };
  label_component(start_arc);
  for (std::size_t k = 0; k < visit.size(); ++k) {
    const Passages p(d.crossings()[visit[k]]);
    if (scratch_label[p.under_out] == 0) label_component(p.under_out);
    if (scratch_label[p.over_out] == 0) label_component(p.over_out);
  }

  PieceLabeling out;
  out.crossings.reserve(piece.size());
  for (int x : piece) {
    const Passages p(d.crossings()[x]);
    out.crossings.push_back(Crossing::from_strands(scratch_label[p.under_in],
                                                   scratch_label[p.under_out],
                                                   scratch_label[p.over_in],
                                                   scratch_label[p.over_out], p.sign));
  }
  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const Crossing& l, const Crossing& r) { return l.arcs[0] < r.arcs[0]; });
  out.code.reserve(5 * piece.size());
  for (const Crossing& c : out.crossings) {
    out.code.insert(out.code.end(), c.arcs.begin(), c.arcs.end());
    out.code.push_back(c.sign);
  }
  // Reset scratch state touched by this labeling.
  for (int x : piece) {
    scratch_seen[x] = 0;
    for (int a : d.crossings()[x].arcs) scratch_label[a] = 0;
  }
  return out;
}

}  // namespace detail

/// Relabels `d` into its canonical representative: minimum serialization
/// over all starting arcs of every connected piece, pieces sorted.
inline OrientedDiagram canonical_form(const OrientedDiagram& d) {
  if (d.is_crossingless()) return d;
  ArcTopology topo(d);
  std::vector<int> scratch_label(d.arc_count() + 1, 0);
  std::vector<char> scratch_seen(d.crossing_count(), 0);
  std::vector<detail::PieceLabeling> best;
  for (const auto& piece : detail::crossing_pieces(d, topo)) {
    detail::PieceLabeling piece_best;
    bool have = false;
    for (int x : piece) {
      for (int s = 0; s < 4; ++s) {
        if (!d.crossings()[x].slot_is_incoming(s)) continue;
        auto cand = detail::label_piece(d, topo, piece, d.crossings()[x].arcs[s], scratch_label,
                                        scratch_seen);
        if (!have || cand.code < piece_best.code) {
          piece_best = std::move(cand);
          have = true;
        }
      }
    }
    best.push_back(std::move(piece_best));
  }
  std::sort(best.begin(), best.end(),
            [](const auto& l, const auto& r) { return l.code < r.code; });
  std::vector<Crossing> xs;
  xs.reserve(d.crossings().size());
  int offset = 0;
  for (const auto& piece : best) {
    for (Crossing c : piece.crossings) {
      for (int& a : c.arcs) a += offset;
      xs.push_back(c);
    }
    offset += 2 * static_cast<int>(piece.crossings.size());
  }
  return OrientedDiagram::from_normalized(std::move(xs), d.free_loops());
}

/// Serialization of an already-canonical diagram.
inline CanonicalCode serialize_canonical(const OrientedDiagram& canonical) {
  CanonicalCode code;
  code.bytes.reserve(4 + 9 * canonical.crossings().size());
  detail::put_u16(code.bytes, canonical.crossing_count());
  detail::put_u16(code.bytes, canonical.free_loops());
  for (const Crossing& c : canonical.crossings()) {
    for (int a : c.arcs) detail::put_u16(code.bytes, a);
    code.bytes += static_cast<char>(c.sign > 0 ? 1 : 0);
  }
  return code;
}

inline CanonicalCode canonical_code(const OrientedDiagram& d) {
  return serialize_canonical(canonical_form(d));
}

// ---------------------------------------------------------------------------
// PD text.

/// Renders `X[a,b,c,d];...;O` text. A two-arc component that only passes
/// over has no label succession to carry its direction; its smaller label is
/// written so that it enters the earlier-listed of its two crossings.
inline std::string to_pd_text(const OrientedDiagram& d) {
  std::vector<int> relabel(d.arc_count() + 1);
  std::iota(relabel.begin(), relabel.end(), 0);
  if (!d.is_crossingless()) {
    ArcTopology topo(d);
    const int n = d.arc_count();
    std::vector<char> seen(n + 1, 0);
    for (int start = 1; start <= n; ++start) {
      if (seen[start]) continue;
      std::vector<int> arcs;
      for (int arc = start; !seen[arc]; arc = topo.next(d, arc)) {
        seen[arc] = 1;
        arcs.push_back(arc);
      }
      if (arcs.size() != 2) continue;
      const bool all_over = topo.head[arcs[0]].slot != 0 && topo.head[arcs[1]].slot != 0;
      if (!all_over) continue;
      const int lo = std::min(arcs[0], arcs[1]);
      const int hi = std::max(arcs[0], arcs[1]);
      const int first_crossing =
          std::min(topo.head[lo].crossing, topo.head[hi].crossing);
      if (topo.head[lo].crossing != first_crossing) std::swap(relabel[lo], relabel[hi]);
    }
  }
  std::string out;
  for (const Crossing& c : d.crossings()) {
    if (!out.empty()) out += ';';
    out += "X[" + std::to_string(relabel[c.arcs[0]]) + "," + std::to_string(relabel[c.arcs[1]]) +
           "," + std::to_string(relabel[c.arcs[2]]) + "," + std::to_string(relabel[c.arcs[3]]) +
           "]";
  }
  for (int i = 0; i < d.free_loops(); ++i) {
    if (!out.empty()) out += ';';
    out += 'O';
  }
  return out;
}

/// Parses and validates PD text:
///   diagram := item (";" item)* ; item := "X[" int "," int "," int "," int "]" | "O"
inline OrientedDiagram parse_pd(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InputError("PD syntax error: empty diagram");

  std::vector<std::array<int, 4>> raw;
  int loops = 0;
  std::size_t pos = 0;
  auto syntax = [&](const std::string& why) {
    throw InputError("PD syntax error at offset " + std::to_string(pos) + ": " + why);
  };
  auto read_int = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) syntax("expected a positive integer");
    if (pos - start > 6) syntax("arc label too large");
    return std::stoi(s.substr(start, pos - start));
  };
  while (true) {
    if (pos < s.size() && s[pos] == 'O') {
      ++loops;
      ++pos;
    } else if (s.compare(pos, 2, "X[") == 0) {
      pos += 2;
      std::array<int, 4> t{};
      for (int k = 0; k < 4; ++k) {
        t[k] = read_int();
        if (k < 3) {
          if (pos >= s.size() || s[pos] != ',') syntax("expected ','");
          ++pos;
        }
      }
      if (pos >= s.size() || s[pos] != ']') syntax("expected ']'");
      ++pos;
      raw.push_back(t);
    } else {
      syntax("expected 'X[' or 'O'");
    }
    if (pos == s.size()) break;
    if (s[pos] != ';') syntax("expected ';'");
    ++pos;
  }

  const int n = static_cast<int>(raw.size());
  if (n == 0) return OrientedDiagram::unlink(loops);
  const int arcs = 2 * n;

  // Multiplicity.
  std::vector<int> count(arcs + 1, 0);
  for (const auto& t : raw) {
    for (int a : t) {
      if (a < 1 || a > arcs)
        throw InputError("arc label " + std::to_string(a) + " out of range 1.." +
                         std::to_string(arcs));
      ++count[a];
    }
  }
  for (int a = 1; a <= arcs; ++a)
    if (count[a] != 2)
      throw InputError("arc label " + std::to_string(a) + " appears " +
                       std::to_string(count[a]) + " times (expected 2)");

  // Components: arcs joined by passages (slots 0-2 and 1-3).
  std::vector<int> parent(arcs + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    return parent[a] == a ? a : parent[a] = find(parent[a]);
  };
  for (const auto& t : raw) {
    parent[find(t[0])] = find(t[2]);
    parent[find(t[1])] = find(t[3]);
  }
  std::map<int, std::vector<int>> members;
  for (int a = 1; a <= arcs; ++a) members[find(a)].push_back(a);
  std::vector<int> lo(arcs + 1), hi(arcs + 1);
  for (const auto& [root, labels] : members) {
    const int mn = labels.front();
    const int mx = labels.back();
    if (mx - mn + 1 != static_cast<int>(labels.size()))
      throw InputError("broken cyclic arc sequence: component containing arc " +
                       std::to_string(mn) + " is not a contiguous label range");
    if (labels.size() < 2)
      throw InputError("broken cyclic arc sequence: arc " + std::to_string(mn) +
                       " closes up after a single passage");
    for (int a : labels) {
      lo[a] = mn;
      hi[a] = mx;
    }
  }
  auto succ = [&](int a) { return a == hi[a] ? lo[a] : a + 1; };
  auto length = [&](int a) { return hi[a] - lo[a] + 1; };

  // Under-passages fix the direction of their component.
  for (const auto& t : raw)
    if (length(t[0]) >= 3 && t[2] != succ(t[0]))
      throw InputError("broken cyclic arc sequence: under-strand " + std::to_string(t[0]) +
                       " -> " + std::to_string(t[2]) + " does not follow arc order");

  std::vector<Crossing> xs;
  xs.reserve(n);
  // Two-arc components take their direction from an under-passage when
  // they have one: arc -> crossing where it enters underneath.
  std::map<int, int> two_arc_head;
  for (int x = 0; x < n; ++x) {
    const auto& t = raw[x];
    if (length(t[0]) == 2) two_arc_head[t[0]] = x;
  }
  for (int x = 0; x < n; ++x) {
    const auto& t = raw[x];
    const int b = t[1];
    const int dd = t[3];
    int sign = 0;
    if (length(b) >= 3) {
      if (dd == succ(b)) {
        sign = +1;
      } else if (b == succ(dd)) {
        sign = -1;
      } else {
        throw InputError("broken cyclic arc sequence: over-strand arcs " + std::to_string(b) +
                         " and " + std::to_string(dd) + " are not consecutive");
      }
    } else {
      // Two arcs {b, dd}. Find where b enters, if determined by an
      // under-passage of the same component.
      auto hb = two_arc_head.find(b);
      auto hd = two_arc_head.find(dd);
      if (hb != two_arc_head.end()) {
        // b enters at an under-passage elsewhere, so here it leaves.
        sign = -1;
      } else if (hd != two_arc_head.end()) {
        sign = +1;
      } else {
        // Over-only two-arc component: the smaller label enters the
        // earlier-listed of the component's two crossings.
        const int small = std::min(b, dd);
        int first = -1;
        for (int y = 0; y < n && first < 0; ++y)
          if (raw[y][1] == small || raw[y][3] == small) first = y;
        const bool small_enters_here = (first == x);
        const int enters = small_enters_here ? small : (small == b ? dd : b);
        sign = (enters == b) ? +1 : -1;
      }
    }
    Crossing c;
    c.arcs = t;
    c.sign = sign;
    xs.push_back(c);
  }
  OrientedDiagram d = OrientedDiagram::from_normalized(std::move(xs), loops);

  // Each arc must now have exactly one incoming and one outgoing end.
  std::vector<int> ins(arcs + 1, 0);
  for (const Crossing& c : d.crossings())
    for (int sl = 0; sl < 4; ++sl)
      if (c.slot_is_incoming(sl)) ++ins[c.arcs[sl]];
  for (int a = 1; a <= arcs; ++a)
    if (ins[a] != 1)
      throw InputError("broken cyclic arc sequence: inconsistent direction on arc " +
                       std::to_string(a));
  if (!is_planar(d)) throw InputError("PD code is not planar");
  return d;
}

}  // namespace skein
