#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "skein/bounds.hpp"
#include "skein/cache.hpp"
#include "skein/dataset.hpp"
#include "skein/diagram.hpp"
#include "skein/homfly.hpp"
#include "skein/moves.hpp"
#include "skein/solver.hpp"

namespace skein {

struct TabulateConfig {
  SolverConfig solver;
  std::optional<double> timeout_secs;  // per row
  unsigned jobs = 1;
  ResultCache* cache = nullptr;
};

struct RowOutcome {
  std::string name;
  int lower = 0;
  int upper = 0;
  std::string td;
  std::string error;
  bool budget_exhausted = false;
  bool from_cache = false;
  std::string mismatch;  // disagreement with the row's expected value
};

struct TabulateReport {
  std::string table;
  std::vector<RowOutcome> rows;

  bool any_budget_exhausted() const {
    return std::any_of(rows.begin(), rows.end(), [](const RowOutcome& r) { return r.budget_exhausted; });
  }
};

/// Simplified canonical form of `d` or of its mirror, whichever has the
/// smaller code, so that mirror pairs are solved identically.
inline OrientedDiagram mirror_representative(const OrientedDiagram& d) {
  OrientedDiagram a = canonical_form(simplify(d));
  OrientedDiagram b = canonical_form(simplify(mirror(d)));
  return serialize_canonical(b) < serialize_canonical(a) ? b : a;
}

inline std::string render_td(int lo, int hi) {
  if (lo == hi) return std::to_string(lo);
  return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

namespace detail {

inline std::string check_expected(const ExpectedTd& e, int lower, int upper) {
  const std::string want = render_td(e.lo, e.hi);
  if (e.hi < lower || e.lo > upper)
    return "expected " + want + " outside computed " + render_td(lower, upper);
  if (lower == upper && e.lo == e.hi && e.lo != lower)
    return "expected " + want + " but computed " + std::to_string(lower);
  return {};
}

inline RowOutcome tabulate_row(const DatasetRow& row, const TabulateConfig& config,
                               HomflyEngine& engine, SkeinReach& reach) {
  RowOutcome out;
  out.name = row.name;
  if (!row.error.empty() || !row.pd) {
    out.error = row.error.empty() ? "missing diagram" : row.error;
    return out;
  }
  try {
    const OrientedDiagram rep = mirror_representative(*row.pd);
    const CanonicalCode code = serialize_canonical(rep);
    std::optional<CachedResult> hit;
    if (config.cache) hit = config.cache->find(code);
    if (hit && hit->lo == hit->hi) {
      out.lower = hit->lo;
      out.upper = hit->hi;
      out.from_cache = true;
    } else {
      SolverConfig sc = config.solver;
      if (config.timeout_secs)
        sc.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(*config.timeout_secs));
      Solver solver(engine, reach, sc);
      BoundsOptions options{row.genus, row.braid_words};
      const TdResult r = solver.compute_td(rep, options);
      out.lower = r.link_lower;
      out.upper = r.diagram_upper;
      out.budget_exhausted = r.budget_exhausted && !r.exact();
      if (config.cache) config.cache->record(code, {engine.compute(rep), out.lower, out.upper});
    }
    out.td = render_td(out.lower, out.upper);
    if (row.expected) out.mismatch = check_expected(*row.expected, out.lower, out.upper);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace detail

/// One TSV line per row: name, lower, upper, td. Failing rows print "-" in
/// the numeric columns and the message in the td column.
inline TabulateReport tabulate(const std::vector<DatasetRow>& rows, const TabulateConfig& config,
                               HomflyEngine& engine, SkeinReach& reach) {
  TabulateReport report;
  report.rows.resize(rows.size());
  if (config.cache) config.cache->seed(engine);
  const unsigned jobs = std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(rows.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      report.rows[i] = detail::tabulate_row(rows[i], config, engine, reach);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < rows.size(); i = next++)
          report.rows[i] = detail::tabulate_row(rows[i], config, engine, reach);
      });
    for (auto& t : workers) t.join();
  }
  report.table = "name\tlower\tupper\ttd\n";
  for (const RowOutcome& r : report.rows) {
    if (!r.error.empty()) {
      report.table += r.name + "\t-\t-\terror: " + r.error + "\n";
    } else {
      report.table += r.name + "\t" + std::to_string(r.lower) + "\t" + std::to_string(r.upper) +
                      "\t" + r.td + "\n";
    }
  }
  return report;
}

inline TabulateReport tabulate(const std::vector<DatasetRow>& rows, const TabulateConfig& config = {}) {
  return tabulate(rows, config, default_homfly_engine(), default_skein_reach());
}

}  // namespace skein
