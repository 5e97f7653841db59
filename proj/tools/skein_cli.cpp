#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skein/skein.hpp"

namespace {

using namespace skein;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kBudgetExhausted = 2;

std::vector<std::string> content_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

OrientedDiagram read_single_diagram(const std::string& path) {
  const auto lines = content_lines(path);
  if (lines.size() != 1)
    throw InputError(path + ": expected exactly one PD code, found " + std::to_string(lines.size()));
  return parse_pd(lines.front());
}

std::vector<BraidWord> read_braids(const std::string& path) {
  std::vector<BraidWord> words;
  for (const auto& line : content_lines(path)) words.push_back(parse_braid(line));
  if (words.empty()) throw InputError(path + ": no braid words");
  return words;
}

std::string stem(const std::string& path) {
  std::string s = std::filesystem::path(path).stem().string();
  return s.empty() ? path : s;
}

struct Budget {
  std::uint64_t nodes = 5'000'000;
  std::optional<double> timeout_secs;

  SolverConfig solver_config() const {
    SolverConfig c;
    c.node_budget = nodes;
    if (timeout_secs)
      c.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(*timeout_secs));
    return c;
  }
};

void add_budget_flags(CLI::App* cmd, Budget& b) {
  cmd->add_option("--budget", b.nodes, "search nodes per depth query")->check(CLI::PositiveNumber);
  cmd->add_option("--timeout-secs", b.timeout_secs, "wall-clock limit")->check(CLI::PositiveNumber);
}

int run_poly(const std::string& file) {
  const auto lines = content_lines(file);
  if (lines.empty()) throw InputError(file + ": no PD codes");
  for (const auto& line : lines) std::cout << homfly(parse_pd(line)).to_string() << '\n';
  return kOk;
}

int run_bounds(const std::string& file, std::optional<int> genus, const std::string& braids) {
  const OrientedDiagram d = read_single_diagram(file);
  BoundsOptions options{genus, {}};
  if (!braids.empty()) options.braid_words = read_braids(braids);
  const BoundsReport report = aggregate_bounds(d, options);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << "name\tlower\tupper\tcontributions\n" << report.to_tsv_row(stem(file)) << '\n';
  return kOk;
}

int run_td(const std::string& file, std::optional<int> genus, const std::string& braids,
           int max_depth, const Budget& budget) {
  const OrientedDiagram d = read_single_diagram(file);
  BoundsOptions options{genus, {}};
  if (!braids.empty()) options.braid_words = read_braids(braids);
  SolverConfig cfg = budget.solver_config();
  cfg.max_depth = max_depth;
  Solver solver(cfg);
  const TdResult r = solver.compute_td(d, options);
  for (const auto& w : r.bounds.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << "name\tlower\tupper\ttd\n"
            << stem(file) << '\t' << r.link_lower << '\t' << r.diagram_upper << '\t' << r.render()
            << '\n';
  return r.budget_exhausted && !r.exact() ? kBudgetExhausted : kOk;
}

int run_braid_bound(const std::string& file) {
  const auto words = read_braids(file);
  std::cout << "mixed_braid_upper\t" << mixed_braid_upper(words) << '\n';
  for (const auto& w : words)
    if (is_homogeneous_connected(w))
      std::cout << "homogeneous_td\t" << w.to_string() << '\t' << positive_braid_td(w) << '\n';
  std::cerr << "warning: braid closures are assumed non-split (diagram is connected)\n";
  return kOk;
}

int run_tabulate(const std::string& file, const std::string& out_path, std::string cache_path,
                 unsigned jobs, int max_depth, const Budget& budget) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open " + file);
  const auto rows = parse_dataset(in);
  if (const char* env = std::getenv("SKEIN_CACHE"); env && *env) cache_path = env;
  std::optional<ResultCache> cache;
  if (!cache_path.empty()) {
    cache.emplace(cache_path);
    for (const auto& w : cache->warnings()) std::cerr << "warning: " << w << '\n';
  }
  TabulateConfig cfg;
  cfg.solver.node_budget = budget.nodes;
  cfg.solver.max_depth = max_depth;
  cfg.timeout_secs = budget.timeout_secs;
  cfg.jobs = jobs;
  cfg.cache = cache ? &*cache : nullptr;
  const TabulateReport report = tabulate(rows, cfg);
  for (const auto& r : report.rows)
    if (!r.mismatch.empty()) std::cerr << "mismatch: " << r.name << ": " << r.mismatch << '\n';
  if (out_path.empty()) {
    std::cout << report.table;
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write " + out_path);
    out << report.table;
  }
  return report.any_budget_exhausted() ? kBudgetExhausted : kOk;
}

int run_tree(const std::string& file, int depth, const std::string& dot_path, const Budget& budget) {
  const OrientedDiagram d = read_single_diagram(file);
  Solver solver(budget.solver_config());
  const DepthResult r = solver.depth_at_most(d, depth);
  if (r.verdict == DepthVerdict::Unknown) {
    std::cerr << "budget exhausted before a tree of depth <= " << depth << " was found\n";
    return kBudgetExhausted;
  }
  if (r.verdict == DepthVerdict::False) {
    std::cerr << "no skein tree of depth <= " << depth << " exists for this diagram\n";
    return kInputError;
  }
  const TreeCheck check = verify_skein_tree(d, *r.witness);
  if (!check) {
    std::cerr << "witness failed verification: " << check.error << '\n';
    return kInputError;
  }
  std::ofstream out(dot_path);
  if (!out) throw InputError("cannot write " + dot_path);
  out << export_dot(*r.witness);
  std::cout << "depth\t" << r.witness->depth() << "\nnodes\t" << r.witness->node_count() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skein tree depth of oriented links"};
  app.require_subcommand(1);

  std::string file, braids, out_path, cache_path, dot_path;
  std::optional<int> genus;
  int max_depth = 64;
  int depth = 0;
  unsigned jobs = 1;
  Budget budget;

  auto* poly = app.add_subcommand("poly", "HOMFLY-PT polynomial of each PD code in a file");
  poly->add_option("file", file)->required();

  auto* bounds = app.add_subcommand("bounds", "lower and upper bounds on td");
  bounds->add_option("file", file)->required();
  bounds->add_option("--genus", genus, "Seifert genus")->check(CLI::NonNegativeNumber);
  bounds->add_option("--braids", braids, "file of braid words for the same link");

  auto* td = app.add_subcommand("td", "skein tree depth, exact or as an interval");
  td->add_option("file", file)->required();
  td->add_option("--genus", genus, "Seifert genus")->check(CLI::NonNegativeNumber);
  td->add_option("--braids", braids, "file of braid words for the same link");
  td->add_option("--max-depth", max_depth, "deepest tree to search for")->check(CLI::NonNegativeNumber);
  add_budget_flags(td, budget);

  auto* braid = app.add_subcommand("braid-bound", "braid-word upper bound");
  braid->add_option("file", file)->required();

  auto* tab = app.add_subcommand("tabulate", "td table for a dataset");
  tab->add_option("file", file)->required();
  tab->add_option("--out", out_path, "write the table here instead of stdout");
  tab->add_option("--cache", cache_path, "result cache file (SKEIN_CACHE overrides)");
  tab->add_option("--jobs", jobs, "rows evaluated concurrently")->check(CLI::PositiveNumber);
  tab->add_option("--max-depth", max_depth, "deepest tree to search for")->check(CLI::NonNegativeNumber);
  add_budget_flags(tab, budget);

  auto* tree = app.add_subcommand("tree", "skein tree witness as DOT");
  tree->add_option("file", file)->required();
  tree->add_option("--depth", depth, "maximum tree depth")->required()->check(CLI::NonNegativeNumber);
  tree->add_option("--dot", dot_path, "output DOT file")->required();
  add_budget_flags(tree, budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*poly) return run_poly(file);
    if (*bounds) return run_bounds(file, genus, braids);
    if (*td) return run_td(file, genus, braids, max_depth, budget);
    if (*braid) return run_braid_bound(file);
    if (*tab) return run_tabulate(file, out_path, cache_path, jobs, max_depth, budget);
    if (*tree) return run_tree(file, depth, dot_path, budget);
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
