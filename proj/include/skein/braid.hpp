#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skein/diagram.hpp"

namespace skein {

/// Braid word on `strands` strands. Letter g stands for sigma_|g| raised to
/// sign(g).
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  std::string to_string() const {
    std::string out = "p=" + std::to_string(strands) + ":";
    for (int g : letters) out += " " + std::to_string(g);
    return out;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

struct BraidStats {
  int length = 0;
  int positives = 0;
  int negatives = 0;
  int strands = 0;
  bool all_indices_used = false;

  friend bool operator==(const BraidStats&, const BraidStats&) = default;
};

/// Parses `p=<strands>: <letter> <letter> ...`.
inline BraidWord parse_braid(std::string_view text) {
  std::string s(text);
  auto fail = [&](const std::string& why) {
    throw InputError("braid syntax error in '" + s + "': " + why);
  };
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip_ws();
  if (s.compare(pos, 2, "p=") != 0) fail("expected 'p='");
  pos += 2;
  skip_ws();
  const std::size_t colon = s.find(':', pos);
  if (colon == std::string::npos) fail("expected ':' after strand count");
  BraidWord w;
  {
    std::istringstream in(s.substr(pos, colon - pos));
    if (!(in >> w.strands)) fail("bad strand count");
    std::string rest;
    if (in >> rest) fail("trailing text after strand count");
  }
  if (w.strands < 2) throw InputError("braid needs at least 2 strands, got " +
                                      std::to_string(w.strands));
  std::istringstream in(s.substr(colon + 1));
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int g = 0;
    try {
      g = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail("bad letter '" + tok + "'");
    }
    if (used != tok.size()) fail("bad letter '" + tok + "'");
    if (g == 0 || std::abs(g) > w.strands - 1)
      throw InputError("generator index " + std::to_string(g) + " out of range for " +
                       std::to_string(w.strands) + " strands");
    w.letters.push_back(g);
  }
  if (w.letters.empty()) throw InputError("empty braid word");
  return w;
}

inline BraidStats braid_stats(const BraidWord& w) {
  BraidStats st;
  st.length = static_cast<int>(w.letters.size());
  st.strands = w.strands;
  std::vector<char> used(w.strands, 0);
  for (int g : w.letters) {
    (g > 0 ? st.positives : st.negatives) += 1;
    used[std::abs(g)] = 1;
  }
  st.all_indices_used = std::all_of(used.begin() + 1, used.end(), [](char u) { return u != 0; });
  return st;
}

/// Closure diagram. Strands run top to bottom at positions 1..p; a positive
/// letter sigma_i crosses the strand at position i over the one at i+1 and
/// gives a positive crossing. Closing arcs return each bottom end to the top
/// of its position.
inline OrientedDiagram braid_closure(const BraidWord& w) {
  int fresh = 1;
  std::vector<int> top(w.strands), current(w.strands);
  for (int i = 0; i < w.strands; ++i) top[i] = current[i] = fresh++;
  std::vector<Crossing> xs;
  xs.reserve(w.letters.size());
  for (int g : w.letters) {
    const int j = std::abs(g) - 1;
    const int left_in = current[j];
    const int right_in = current[j + 1];
    const int left_out = fresh++;   // ends at position j+1
    const int right_out = fresh++;  // ends at position j
    if (g > 0) {
      xs.push_back(Crossing::from_strands(right_in, right_out, left_in, left_out, +1));
    } else {
      xs.push_back(Crossing::from_strands(left_in, left_out, right_in, right_out, -1));
    }
    current[j] = right_out;
    current[j + 1] = left_out;
  }
  std::map<int, int> close;
  int loops = 0;
  for (int i = 0; i < w.strands; ++i) {
    if (current[i] == top[i]) {
      ++loops;  // untouched strand
    } else {
      close[current[i]] = top[i];
    }
  }
  for (Crossing& c : xs)
    for (int& a : c.arcs)
      if (auto it = close.find(a); it != close.end()) a = it->second;
  return OrientedDiagram::from_crossings(xs, loops);
}

/// td = length - strands + 1 for a closure of a positive (or negative) braid
/// that uses every generator.
inline int positive_braid_td(const BraidWord& w) {
  const BraidStats st = braid_stats(w);
  if (st.positives > 0 && st.negatives > 0)
    throw std::invalid_argument("braid word mixes signs; the homogeneous formula does not apply");
  if (!st.all_indices_used)
    throw std::invalid_argument("braid word leaves a generator unused; closure may split");
  return st.length - st.strands + 1;
}

inline bool is_homogeneous_connected(const BraidWord& w) {
  const BraidStats st = braid_stats(w);
  return st.all_indices_used && (st.positives == 0 || st.negatives == 0);
}

/// min over words of length - strands + 1 + min(positives, negatives).
inline int mixed_braid_upper(const std::vector<BraidWord>& words) {
  if (words.empty()) throw std::invalid_argument("mixed_braid_upper needs at least one word");
  int best = std::numeric_limits<int>::max();
  for (const BraidWord& w : words) {
    const BraidStats st = braid_stats(w);
    if (!st.all_indices_used)
      throw std::invalid_argument("braid word '" + w.to_string() +
                                  "' leaves a generator unused; closure may split");
    best = std::min(best, st.length - st.strands + 1 + std::min(st.positives, st.negatives));
  }
  return best;
}

}  // namespace skein
