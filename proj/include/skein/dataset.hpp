#pragma once

#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "skein/braid.hpp"
#include "skein/diagram.hpp"

namespace skein {

/// Expected td for regression checks: an exact value has lo == hi.
struct ExpectedTd {
  int lo = 0;
  int hi = 0;

  friend bool operator==(const ExpectedTd&, const ExpectedTd&) = default;
};

struct DatasetRow {
  std::string name;
  std::string pd_text;
  std::optional<OrientedDiagram> pd;  // empty when `error` is set
  std::optional<int> genus;
  std::vector<BraidWord> braid_words;
  std::optional<ExpectedTd> expected;
  std::string error;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline int parse_int_field(const std::string& text, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw InputError(std::string("bad ") + what + " '" + text + "'");
  }
  if (used != text.size()) throw InputError(std::string("bad ") + what + " '" + text + "'");
  return v;
}

}  // namespace detail

/// Blank, an integer, or "[lo,hi]".
inline std::optional<ExpectedTd> parse_expected_td(std::string_view text) {
  std::string s = detail::trim(text);
  if (s.empty()) return std::nullopt;
  if (s.front() == '[') {
    if (s.back() != ']') throw InputError("bad expected interval '" + s + "'");
    auto parts = detail::split(std::string_view(s).substr(1, s.size() - 2), ',');
    if (parts.size() != 2) throw InputError("bad expected interval '" + s + "'");
    ExpectedTd e{detail::parse_int_field(detail::trim(parts[0]), "expected lower"),
                 detail::parse_int_field(detail::trim(parts[1]), "expected upper")};
    if (e.lo > e.hi) throw InputError("expected interval is empty: '" + s + "'");
    return e;
  }
  const int v = detail::parse_int_field(s, "expected td");
  return ExpectedTd{v, v};
}

/// Dataset TSV: name, pd, genus, braid (words separated by ';'), expected.
/// Blank lines, '#' comments and a leading header line starting with "name"
/// are skipped. A row whose fields fail to parse keeps its name and carries the
/// message in `error`; a missing or duplicated name rejects the whole file.
inline std::vector<DatasetRow> parse_dataset(std::istream& in) {
  std::vector<DatasetRow> rows;
  std::set<std::string> names;
  std::string line;
  int lineno = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto cols = detail::split(line, '\t');
    const bool header = first_content && detail::trim(cols[0]) == "name";
    first_content = false;
    if (header) continue;
    DatasetRow row;
    row.name = detail::trim(cols[0]);
    if (row.name.empty()) throw InputError("line " + std::to_string(lineno) + ": empty name");
    if (!names.insert(row.name).second)
      throw InputError("line " + std::to_string(lineno) + ": duplicate name '" + row.name + "'");
    cols.resize(5);
    row.pd_text = detail::trim(cols[1]);
    try {
      if (row.pd_text.empty()) throw InputError("missing pd code");
      row.pd = parse_pd(row.pd_text);
      if (auto g = detail::trim(cols[2]); !g.empty()) {
        row.genus = detail::parse_int_field(g, "genus");
        if (*row.genus < 0) throw InputError("negative genus");
      }
      for (const std::string& w : detail::split(cols[3], ';'))
        if (auto tw = detail::trim(w); !tw.empty()) row.braid_words.push_back(parse_braid(tw));
      row.expected = parse_expected_td(cols[4]);
    } catch (const InputError& e) {
      row.pd.reset();
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<DatasetRow> parse_dataset_text(const std::string& text) {
  std::istringstream in(text);
  return parse_dataset(in);
}

}  // namespace skein
