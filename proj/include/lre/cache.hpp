#pragma once

#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include <json.hpp>

#include "lre/permutation.hpp"

namespace lre {

inline std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Persistent store of R_n sorting results keyed by (n, algorithm,
/// tool version), held as one JSON document. Entries are never served
/// without replaying the stored witness against R_n first.
class ResultCache {
 public:
  struct Entry {
    long long count = 0;
    std::string moves;
    nlohmann::json stats = nlohmann::json::object();
    std::string timestamp;
  };

  /// Missing or unreadable files yield an empty cache; corrupt entries are
  /// skipped. Loading never fails.
  static ResultCache load(const std::filesystem::path& file) {
    ResultCache cache;
    std::ifstream in(file);
    if (!in) return cache;
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) return cache;
    for (const auto& e : doc["entries"]) {
      if (!e.is_object() || !e.contains("n") || !e.contains("algo") ||
          !e.contains("tool_version") || !e.contains("count") || !e.contains("moves"))
        continue;
      if (!e["n"].is_number_integer() || !e["count"].is_number_integer() ||
          !e["algo"].is_string() || !e["tool_version"].is_string() || !e["moves"].is_string())
        continue;
      Entry entry;
      entry.count = e["count"].get<long long>();
      entry.moves = e["moves"].get<std::string>();
      if (e.contains("stats") && e["stats"].is_object()) entry.stats = e["stats"];
      if (e.contains("timestamp") && e["timestamp"].is_string())
        entry.timestamp = e["timestamp"].get<std::string>();
      cache.entries_[{e["n"].get<int>(), e["algo"].get<std::string>(),
                      e["tool_version"].get<std::string>()}] = std::move(entry);
    }
    return cache;
  }

  /// Serves an entry only after its witness re-verifies: the stored moves
  /// must parse, sort R_n, and match the stored count. Anything else is
  /// dropped from the cache and reported as a miss, so the caller
  /// recomputes.
  std::optional<Entry> verified_lookup(int n, std::string_view algo, std::string_view version) {
    const Key key{n, std::string(algo), std::string(version)};
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    if (!witness_ok(n, it->second)) {
      entries_.erase(it);
      dirty_ = true;
      return std::nullopt;
    }
    return it->second;
  }

  void store(int n, std::string_view algo, std::string_view version, Entry entry) {
    entries_[{n, std::string(algo), std::string(version)}] = std::move(entry);
    dirty_ = true;
  }

  /// Atomic write: the document goes to a sibling temp file first, then
  /// renames over the destination.
  void save(const std::filesystem::path& file) const {
    nlohmann::json doc;
    doc["entries"] = nlohmann::json::array();
    for (const auto& [key, entry] : entries_) {
      nlohmann::json e;
      e["n"] = std::get<0>(key);
      e["algo"] = std::get<1>(key);
      e["tool_version"] = std::get<2>(key);
      e["count"] = entry.count;
      e["moves"] = entry.moves;
      e["stats"] = entry.stats;
      e["timestamp"] = entry.timestamp;
      doc["entries"].push_back(std::move(e));
    }
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) throw Error("cannot write cache file: " + tmp.string());
      out << doc.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, file);
  }

  bool dirty() const { return dirty_; }
  std::size_t size() const { return entries_.size(); }

 private:
  using Key = std::tuple<int, std::string, std::string>;

  static bool witness_ok(int n, const Entry& entry) {
    if (entry.count < 0 || static_cast<std::size_t>(entry.count) != entry.moves.size()) return false;
    try {
      MoveSequence seq = parse_moves(entry.moves);
      return apply_sequence(reverse_perm(n), seq) == identity_perm(n);
    } catch (const Error&) {
      return false;
    }
  }

  std::map<Key, Entry> entries_;
  bool dirty_ = false;
};

}  // namespace lre
