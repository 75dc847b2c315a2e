#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtw/enumerate.hpp"

namespace mtw {

/// Two cached records disagree on the count for the same (family, p)
/// key, or the cache file cannot be parsed. CLI exit code 3.
class cache_integrity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline nlohmann::ordered_json record_to_json(const CountRecord& r) {
  nlohmann::ordered_json j;
  j["family"]["nu"] = r.family.nu;
  j["family"]["m"] = r.family.m;
  j["family"]["d"] = r.family.d;
  j["p"] = r.p;
  j["count"] = std::to_string(r.count);
  j["method"] = to_string(r.method);
  j["produced_at"] = r.produced_at;
  return j;
}

inline CountRecord record_from_json(const nlohmann::json& j) {
  CountRecord r;
  r.family.nu = j.at("family").at("nu").get<int>();
  r.family.m = j.at("family").at("m").get<int>();
  r.family.d = j.at("family").at("d").get<int>();
  r.p = j.at("p").get<std::uint32_t>();
  r.count = std::stoull(j.at("count").get<std::string>());
  r.method = count_method_from_string(j.at("method").get<std::string>());
  r.produced_at = j.at("produced_at").get<std::string>();
  return r;
}

namespace detail {

struct CacheLine {
  std::string raw;
  CountRecord record;
};

inline std::vector<CacheLine> read_cache(const std::filesystem::path& path) {
  std::vector<CacheLine> lines;
  std::ifstream in(path);
  if (!in) return lines;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      lines.push_back({line, record_from_json(nlohmann::json::parse(line))});
    } catch (const std::exception& e) {
      throw cache_integrity_error("cache " + path.string() + " line " +
                                  std::to_string(line_no) + ": " + e.what());
    }
  }
  return lines;
}

inline void check_consistent(const std::vector<CacheLine>& lines, const CountRecord& r,
                             const std::filesystem::path& path) {
  for (const auto& l : lines) {
    if (l.record.family == r.family && l.record.p == r.p && l.record.count != r.count)
      throw cache_integrity_error("cache " + path.string() + ": conflicting counts for " +
                                  to_string(r.family) + " over F_" + std::to_string(r.p) +
                                  " (" + std::to_string(l.record.count) + " vs " +
                                  std::to_string(r.count) + ")");
  }
}

}  // namespace detail

/// Appends a record to the JSON-lines cache. The new content is written
/// to a temporary file and renamed over the original, so readers never
/// see a torn file. Re-storing an identical (key, count) pair is a
/// no-op; a conflicting count raises cache_integrity_error.
inline void cache_store(const CountRecord& record, const std::filesystem::path& path) {
  auto lines = detail::read_cache(path);
  detail::check_consistent(lines, record, path);
  for (const auto& l : lines)
    if (l.record.family == record.family && l.record.p == record.p) return;

  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cache_store: cannot write " + tmp.string());
    for (const auto& l : lines) out << l.raw << '\n';
    out << record_to_json(record).dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

/// Newest record for (spec, p), if any. All matching records must agree
/// on the count, otherwise cache_integrity_error.
inline std::optional<CountRecord> cache_lookup(const FamilySpec& spec, std::uint32_t p,
                                               const std::filesystem::path& path) {
  const auto lines = detail::read_cache(path);
  std::optional<CountRecord> found;
  for (const auto& l : lines) {
    if (!(l.record.family == spec) || l.record.p != p) continue;
    if (found && found->count != l.record.count)
      throw cache_integrity_error("cache " + path.string() + ": conflicting counts for " +
                                  to_string(spec) + " over F_" + std::to_string(p));
    found = l.record;
  }
  return found;
}

}  // namespace mtw
