#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skein/skein.hpp"

namespace skein::testing {

inline const char* kTrefoil = "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]";
inline const char* kHopf = "X[4,1,3,2];X[2,3,1,4]";
inline const char* kFigureEight = "X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]";

inline std::string data_path(const std::string& file) { return std::string(SKEIN_DATA_DIR) + "/" + file; }

inline const std::vector<DatasetRow>& bundled_rows() {
  static const std::vector<DatasetRow> rows = [] {
    std::ifstream in(data_path("small_links.tsv"));
    return parse_dataset(in);
  }();
  return rows;
}

inline const DatasetRow& bundled(const std::string& name) {
  for (const auto& r : bundled_rows())
    if (r.name == name) return r;
  throw std::runtime_error("no bundled row " + name);
}

/// Every bundled diagram plus a few kinked and mirrored variants.
inline std::vector<std::pair<std::string, OrientedDiagram>> fixture_diagrams() {
  std::vector<std::pair<std::string, OrientedDiagram>> out;
  for (const auto& r : bundled_rows()) out.emplace_back(r.name, *r.pd);
  out.emplace_back("mirror K5a1", mirror(*bundled("K5a1").pd));
  out.emplace_back("kinked trefoil", add_kink(parse_pd(kTrefoil), 2, false, -1));
  out.emplace_back("hopf + loop", parse_pd(std::string(kHopf) + ";O"));
  out.emplace_back("p=3: 1 1 -2", braid_closure(parse_braid("p=3: 1 1 -2")));
  return out;
}

/// Same diagram under a random bijection of arc labels and a random crossing
/// order.
inline OrientedDiagram random_relabel(const OrientedDiagram& d, std::mt19937& rng) {
  std::vector<int> labels(d.arc_count());
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<int> image(labels);
  for (int& v : image) v = v * 7 + 3;
  std::shuffle(image.begin(), image.end(), rng);
  std::vector<Crossing> xs = d.crossings();
  for (Crossing& c : xs)
    for (int& a : c.arcs) a = image[a - 1];
  std::shuffle(xs.begin(), xs.end(), rng);
  return OrientedDiagram::from_crossings(xs, d.free_loops());
}

/// One random isotopy step: a curl, a bigon, a triangle move, or a full
/// simplification.
inline OrientedDiagram random_reidemeister_step(const OrientedDiagram& d, std::mt19937& rng,
                                                int max_crossings) {
  std::uniform_int_distribution<int> pick(0, 3);
  const int kind = pick(rng);
  if (kind == 0 && d.crossing_count() + 1 <= max_crossings) {
    const int arcs = d.arc_count();
    const bool loop = arcs == 0 || (d.free_loops() > 0 && rng() % 4 == 0);
    if (arcs == 0 && d.free_loops() == 0) return d;
    const int arc = loop ? 0 : 1 + static_cast<int>(rng() % arcs);
    return add_kink(d, arc, rng() % 2 == 0, rng() % 2 == 0 ? 1 : -1);
  }
  if (kind == 1 && d.crossing_count() + 2 <= max_crossings) {
    auto next = r2_creation_neighbours(d);
    if (!next.empty()) return next[rng() % next.size()];
  }
  if (kind == 2) {
    auto next = r3_neighbours(d);
    if (!next.empty()) return next[rng() % next.size()];
  }
  return simplify(d);
}

/// Depth-bounded enumeration of every resolution tree with no memo and no
/// pruning; leaves are recognised unlinks.
inline bool brute_force_depth(const OrientedDiagram& d, int k) {
  const OrientedDiagram s = simplify(d);
  if (recognize_unlink(s).is_unlink()) return true;
  if (k == 0) return false;
  for (int i = 0; i < s.crossing_count(); ++i)
    if (brute_force_depth(switch_crossing(s, i), k - 1) &&
        brute_force_depth(smooth_crossing(s, i), k - 1))
      return true;
  return false;
}

inline int brute_force_td(const OrientedDiagram& d, int max_k) {
  for (int k = 0; k <= max_k; ++k)
    if (brute_force_depth(d, k)) return k;
  return -1;
}

inline LaurentPoly2 random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4), exp(-3, 3), coeff(-5, 5);
  LaurentPoly2 p;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) p += LaurentPoly2::monomial(coeff(rng), exp(rng), exp(rng));
  return p;
}

}  // namespace skein::testing
