#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/homfly.hpp"
#include "skein/laurent_poly.hpp"

namespace skein {

struct CachedResult {
  LaurentPoly2 poly;
  int lo = 0;
  int hi = 0;
};

/// Append-only result file. Each line is
/// `<canonical code hex>\t<polynomial>\t<lower>\t<upper>`; repeated codes
/// tighten the stored interval. Lines that fail to parse are skipped and
/// reported through warnings().
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

  const std::filesystem::path& path() const { return path_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
  }

  std::optional<CachedResult> find(const CanonicalCode& code) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(code);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  /// Makes every cached polynomial available to the engine's memo.
  void seed(HomflyEngine& engine) const {
    std::lock_guard lock(mu_);
    for (const auto& [code, r] : entries_) engine.seed(code, r.poly);
  }

  /// Stores a result and appends it to the file unless nothing changed.
  void record(const CanonicalCode& code, const CachedResult& result) {
    std::lock_guard lock(mu_);
    if (!merge(code, result)) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) {
      warnings_.push_back("cannot append to cache file " + path_.string());
      return;
    }
    out << code.hex() << '\t' << result.poly.to_string() << '\t' << result.lo << '\t'
        << result.hi << '\n';
  }

 private:
  bool merge(const CanonicalCode& code, const CachedResult& r) {
    auto [it, inserted] = entries_.try_emplace(code, r);
    if (inserted) return true;
    CachedResult& e = it->second;
    if (e.poly != r.poly) {
      warnings_.push_back("conflicting polynomial for cached code " + code.hex());
      return false;
    }
    const int lo = std::max(e.lo, r.lo);
    const int hi = std::min(e.hi, r.hi);
    if (lo > hi) {
      warnings_.push_back("conflicting interval for cached code " + code.hex());
      return false;
    }
    if (lo == e.lo && hi == e.hi) return false;
    e.lo = lo;
    e.hi = hi;
    return true;
  }

  void load() {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        std::vector<std::string> cols;
        std::size_t start = 0;
        while (true) {
          const auto pos = line.find('\t', start);
          cols.push_back(line.substr(start, pos == std::string::npos ? pos : pos - start));
          if (pos == std::string::npos) break;
          start = pos + 1;
        }
        if (cols.size() != 4) throw InputError("expected 4 fields");
        const CanonicalCode code = CanonicalCode::from_hex(cols[0]);
        if (code.bytes.size() < 4) throw InputError("truncated code");
        CachedResult r{LaurentPoly2::parse(cols[1]), std::stoi(cols[2]), std::stoi(cols[3])};
        if (r.lo < 0 || r.lo > r.hi) throw InputError("bad interval");
        merge(code, r);
      } catch (const std::exception& e) {
        warnings_.push_back(path_.string() + ":" + std::to_string(lineno) +
                            ": skipped corrupt cache line (" + e.what() + ")");
      }
    }
  }

  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::map<CanonicalCode, CachedResult> entries_;
  std::vector<std::string> warnings_;
};

}  // namespace skein
