#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtw/motive.hpp"

namespace mtw {

/// Slope function d -> l(d) used as the truncation cutoff when comparing
/// consecutive objects: either the default rule min(d, floor(d/2) + 2)
/// or an explicit nondecreasing table over d = 0 .. size-1.
class SlopeFunction {
 public:
  static SlopeFunction default_slope() { return SlopeFunction(); }

  static SlopeFunction from_table(std::vector<int> values) {
    if (values.empty()) throw std::invalid_argument("SlopeFunction: empty table");
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] < 0) throw std::invalid_argument("SlopeFunction: negative slope value");
      if (i > 0 && values[i] < values[i - 1])
        throw std::invalid_argument("SlopeFunction: table must be nondecreasing");
    }
    SlopeFunction s;
    s.table_ = std::move(values);
    return s;
  }

  bool is_default() const { return table_.empty(); }
  const std::vector<int>& table() const { return table_; }

  int operator()(int d) const {
    if (d < 0) throw std::invalid_argument("SlopeFunction: d must be >= 0");
    if (is_default()) return std::min(d, d / 2 + 2);
    if (d >= static_cast<int>(table_.size()))
      throw std::invalid_argument("SlopeFunction: d = " + std::to_string(d) +
                                  " outside the declared table domain");
    return table_[static_cast<std::size_t>(d)];
  }

 private:
  SlopeFunction() = default;
  std::vector<int> table_;
};

/// Per-d verdicts for a sequence M_0, M_1, ...: verdict[d] states that
/// t_{<l(d)} M_d and t_{<l(d)} M_{d+1} have equal canonical form, which
/// for split objects is an isomorphism.
inline std::vector<bool> stability_verdicts(const std::vector<SplitTateMotive>& seq,
                                            const SlopeFunction& slope) {
  if (seq.size() < 2)
    throw std::invalid_argument("stability_verdicts: need at least two objects");
  std::vector<bool> out;
  out.reserve(seq.size() - 1);
  for (std::size_t d = 0; d + 1 < seq.size(); ++d) {
    const int cutoff = slope(static_cast<int>(d));
    out.push_back(truncate_below(seq[d], cutoff) == truncate_below(seq[d + 1], cutoff));
  }
  return out;
}

/// Transfer of stability along comparison maps known below slope m:
/// stability with slope l on one side gives stability with the pointwise
/// minimum min(l, m), valid exactly on the verified range. Any false
/// verdict in that range is an error naming the offending d.
inline SlopeFunction transfer_slope(const std::vector<bool>& verdicts_m, const SlopeFunction& l,
                                    const SlopeFunction& m) {
  if (verdicts_m.empty()) throw std::invalid_argument("transfer_slope: empty verdict range");
  for (std::size_t d = 0; d < verdicts_m.size(); ++d)
    if (!verdicts_m[d])
      throw std::invalid_argument("transfer_slope: comparison fails at d = " + std::to_string(d));
  std::vector<int> values;
  values.reserve(verdicts_m.size());
  for (std::size_t d = 0; d < verdicts_m.size(); ++d)
    values.push_back(std::min(l(static_cast<int>(d)), m(static_cast<int>(d))));
  return SlopeFunction::from_table(std::move(values));
}

}  // namespace mtw
