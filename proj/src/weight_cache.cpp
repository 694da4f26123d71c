#include "metacyclic/weight_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>

#include <json.hpp>

#include "metacyclic/error.hpp"
#include "metacyclic/omega.hpp"
#include "metacyclic/version.hpp"

namespace metacyclic {

std::string to_json_line(const WeightRecord& record) {
  const nlohmann::json j = {
      {"n", record.n},
      {"k", record.k},
      {"key", record.key},
      {"sequence", record.sequence},
      {"weight", record.weight},
      {"witness", record.witness},
      {"tool_version", record.tool_version},
  };
  return j.dump();
}

std::optional<WeightRecord> parse_record(std::string_view line) {
  const auto j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (!j.is_object()) return std::nullopt;
  try {
    WeightRecord r;
    r.n = j.at("n").get<std::int64_t>();
    r.k = j.at("k").get<std::int64_t>();
    r.key = j.at("key").get<std::string>();
    r.sequence = j.at("sequence").get<std::vector<std::int64_t>>();
    r.weight = j.at("weight").get<std::int64_t>();
    r.witness = j.at("witness").get<std::vector<std::int64_t>>();
    r.tool_version = j.at("tool_version").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

bool replay_valid(const WeightRecord& record) {
  try {
    const UnitContext ctx = build_context(record.n, record.k);
    const ExponentSeq seq(record.sequence, ctx.alpha());
    const BudgetSeq budget{record.witness};
    return budget.weight() == record.weight && omega_coverage(ctx, seq, budget).full();
  } catch (const Error&) {
    return false;
  }
}

WeightCache::WeightCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto record = parse_record(line);
    if (!record || record->tool_version != kToolVersion) {
      ++ignored_;
      continue;
    }
    records_[{record->n, record->k, record->key}] = std::move(*record);
  }
}

std::filesystem::path WeightCache::default_path() {
  if (const char* env = std::getenv("METACYCLIC_CACHE"); env != nullptr && *env != '\0') return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0')
    return std::filesystem::path(xdg) / "metacyclic" / "weights.jsonl";
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0')
    return std::filesystem::path(home) / ".cache" / "metacyclic" / "weights.jsonl";
  return "metacyclic-weights.jsonl";
}

std::optional<WeightRecord> WeightCache::lookup(std::int64_t n, std::int64_t k, const std::string& key) const {
  std::shared_lock lock(mutex_);
  const auto it = records_.find({n, k, key});
  if (it == records_.end() || !replay_valid(it->second)) return std::nullopt;
  return it->second;
}

void WeightCache::store(const WeightRecord& record) {
  std::unique_lock lock(mutex_);
  records_[{record.n, record.k, record.key}] = record;
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  if (!out) fail(ErrorKind::validation, "cannot write cache file " + path_.string());
  out << to_json_line(record) << '\n';
}

void WeightCache::clear() {
  std::unique_lock lock(mutex_);
  records_.clear();
  ignored_ = 0;
  std::error_code ec;
  std::filesystem::remove(path_, ec);
}

std::vector<WeightRecord> WeightCache::records() const {
  std::shared_lock lock(mutex_);
  std::vector<WeightRecord> out;
  for (const auto& [key, record] : records_) out.push_back(record);
  return out;
}

}  // namespace metacyclic
