#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include <json.hpp>

#include "verlinde/errors.hpp"
#include "verlinde/rational.hpp"

namespace verlinde {

/// One line of the append-only JSON-lines result cache.
struct CacheRecord {
  std::string group;
  int level = 0;
  int genus = 0;
  BigInt value;

  std::string to_line() const {
    nlohmann::ordered_json j;
    j["group"] = group;
    j["level"] = level;
    j["genus"] = genus;
    j["value"] = value.get_str();
    return j.dump();
  }

  /// nullopt for blank, torn or otherwise malformed lines.
  static std::optional<CacheRecord> from_line(const std::string& line) {
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    try {
      CacheRecord r;
      r.group = j.at("group").get<std::string>();
      r.level = j.at("level").get<int>();
      r.genus = j.at("genus").get<int>();
      r.value = parse_bigint(j.at("value").get<std::string>());
      return r;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
};

inline std::filesystem::path default_cache_path() {
  if (const char* env = std::getenv("VERLINDE_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "verlinde" / "results.jsonl";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "verlinde" / "results.jsonl";
  }
  return "verlinde-results.jsonl";
}

/// Keyed by (group, level, genus). Later duplicates of a key are ignored.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

  const std::filesystem::path& path() const { return path_; }
  std::size_t size() const { return entries_.size(); }

  std::optional<BigInt> lookup(const std::string& group, int level, int genus) const {
    auto it = entries_.find({group, level, genus});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  /// Appends one full line and flushes it.
  void store(const CacheRecord& r) {
    if (lookup(r.group, r.level, r.genus)) return;
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    bool needs_newline = false;
    if (std::ifstream in(path_, std::ios::binary); in && in.seekg(0, std::ios::end) && in.tellg() > 0) {
      in.seekg(-1, std::ios::end);
      needs_newline = in.get() != '\n';
    }
    std::ofstream os(path_, std::ios::app);
    if (!os) throw Error("cannot open cache file " + path_.string());
    if (needs_newline) os << "\n";  // terminate a torn record from an interrupted run
    os << r.to_line() << "\n";
    os.flush();
    entries_.emplace(std::tuple{r.group, r.level, r.genus}, r.value);
  }

 private:
  void load() {
    std::ifstream is(path_);
    std::string line;
    while (std::getline(is, line)) {
      if (auto r = CacheRecord::from_line(line)) entries_.emplace(std::tuple{r->group, r->level, r->genus}, r->value);
    }
  }

  std::filesystem::path path_;
  std::map<std::tuple<std::string, int, int>, BigInt> entries_;
};

}  // namespace verlinde
