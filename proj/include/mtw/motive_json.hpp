#pragma once

#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "mtw/motive.hpp"
#include "mtw/stability.hpp"

namespace mtw {

/// Canonical JSON form of a split object: the summand list in canonical
/// order, each summand as {"rank", "torsion", "twist", "degree"}.
inline nlohmann::ordered_json motive_to_json(const SplitTateMotive& m) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& s : m.summands()) {
    nlohmann::ordered_json j;
    j["rank"] = s.group.free_rank();
    j["torsion"] = s.group.invariant_factors();
    j["twist"] = s.twist;
    j["degree"] = s.degree;
    out.push_back(std::move(j));
  }
  return out;
}

/// Parses a split object from a JSON summand list; summand order and
/// torsion normalization are not required on input.
inline SplitTateMotive motive_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("motive: expected a JSON array of summands");
  std::vector<SplitSummand> summands;
  for (const auto& item : j) {
    if (!item.is_object()) throw std::invalid_argument("motive: summand must be a JSON object");
    const std::int64_t rank = item.value("rank", std::int64_t{0});
    std::vector<std::int64_t> torsion;
    if (item.contains("torsion")) {
      if (!item.at("torsion").is_array())
        throw std::invalid_argument("motive: torsion must be an array of integers");
      torsion = item.at("torsion").get<std::vector<std::int64_t>>();
    }
    const int tw = item.value("twist", 0);
    const int deg = item.value("degree", 0);
    summands.push_back({FgAbelianGroup(rank, torsion), tw, deg});
  }
  return SplitTateMotive(std::move(summands));
}

/// A sequence file is a JSON array of split objects indexed by d.
inline std::vector<SplitTateMotive> sequence_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("sequence: expected a JSON array of motives");
  std::vector<SplitTateMotive> seq;
  seq.reserve(j.size());
  for (const auto& item : j) seq.push_back(motive_from_json(item));
  return seq;
}

/// A slope table file is a JSON array of values l(0), l(1), ...
inline SlopeFunction slope_table_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("slope table: expected a JSON array of integers");
  return SlopeFunction::from_table(j.get<std::vector<int>>());
}

}  // namespace mtw
