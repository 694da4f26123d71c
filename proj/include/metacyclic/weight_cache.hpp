#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace metacyclic {

/// Persisted result of one weight search.
struct WeightRecord {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::string key;                     // "alpha", "level:<r>" or "seq:<i_1>,...,<i_r>"
  std::vector<std::int64_t> sequence;  // sequence the witness budgets apply to
  std::int64_t weight = 0;
  std::vector<std::int64_t> witness;
  std::string tool_version;

  bool operator==(const WeightRecord&) const = default;
};

std::string to_json_line(const WeightRecord& record);
std::optional<WeightRecord> parse_record(std::string_view line);

// Replaying the witness covers Z_n and sums to the recorded weight.
bool replay_valid(const WeightRecord& record);

/// Line-delimited cache file. Lookups may run concurrently; stores are serialised.
class WeightCache {
 public:
  explicit WeightCache(std::filesystem::path path);

  // $METACYCLIC_CACHE, else $XDG_CACHE_HOME/metacyclic/weights.jsonl, else ~/.cache/...
  static std::filesystem::path default_path();

  // Only records carrying the current tool version that still replay.
  std::optional<WeightRecord> lookup(std::int64_t n, std::int64_t k, const std::string& key) const;
  void store(const WeightRecord& record);
  void clear();

  std::vector<WeightRecord> records() const;
  std::size_t ignored_lines() const noexcept { return ignored_; }
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  using Key = std::tuple<std::int64_t, std::int64_t, std::string>;

  std::filesystem::path path_;
  std::map<Key, WeightRecord> records_;
  std::size_t ignored_ = 0;
  mutable std::shared_mutex mutex_;
};

}  // namespace metacyclic
