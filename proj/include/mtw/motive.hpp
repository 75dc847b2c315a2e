#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "mtw/abelian.hpp"
#include "mtw/tate_class.hpp"

namespace mtw {

/// One summand A(q)[n] of a split object: a finitely generated abelian
/// group, a Tate twist and a homological degree. The weight of the
/// summand is -q.
struct SplitSummand {
  FgAbelianGroup group;
  int twist = 0;
  int degree = 0;

  friend bool operator==(const SplitSummand& a, const SplitSummand& b) {
    return a.degree == b.degree && a.twist == b.twist && a.group == b.group;
  }

  friend bool operator<(const SplitSummand& a, const SplitSummand& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.twist != b.twist) return a.twist < b.twist;
    return a.group < b.group;
  }
};

/// Finite direct sum of summands A(q)[n] in canonical form: trivial
/// groups dropped, summands sorted by (degree, twist), and summands
/// sharing one (degree, twist) slot merged into a single group in
/// normal form. Split objects are isomorphic exactly when their slotwise
/// groups are, so equality of canonical forms is isomorphism.
class SplitTateMotive {
 public:
  SplitTateMotive() = default;

  explicit SplitTateMotive(std::vector<SplitSummand> summands) : summands_(std::move(summands)) {
    std::erase_if(summands_, [](const SplitSummand& s) { return s.group.is_trivial(); });
    std::sort(summands_.begin(), summands_.end());
    std::size_t w = 0;
    for (std::size_t r = 0; r < summands_.size(); ++r) {
      if (w > 0 && summands_[w - 1].degree == summands_[r].degree &&
          summands_[w - 1].twist == summands_[r].twist) {
        summands_[w - 1].group = direct_sum(summands_[w - 1].group, summands_[r].group);
      } else {
        if (w != r) summands_[w] = std::move(summands_[r]);
        ++w;
      }
    }
    summands_.resize(w);
  }

  static SplitTateMotive zero() { return {}; }

  /// A(q)[n] with a single summand.
  static SplitTateMotive summand(FgAbelianGroup group, int twist, int degree) {
    return SplitTateMotive({{std::move(group), twist, degree}});
  }

  const std::vector<SplitSummand>& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }

  friend bool operator==(const SplitTateMotive& a, const SplitTateMotive& b) {
    return a.summands_ == b.summands_;
  }

 private:
  std::vector<SplitSummand> summands_;
};

inline SplitTateMotive direct_sum(const SplitTateMotive& a, const SplitTateMotive& b) {
  std::vector<SplitSummand> s = a.summands();
  s.insert(s.end(), b.summands().begin(), b.summands().end());
  return SplitTateMotive(std::move(s));
}

/// Shift [k]: adds k to every homological degree.
inline SplitTateMotive shift(const SplitTateMotive& m, int k) {
  std::vector<SplitSummand> s = m.summands();
  for (auto& x : s) x.degree += k;
  return SplitTateMotive(std::move(s));
}

/// Twist (k): adds k to every Tate twist.
inline SplitTateMotive twist(const SplitTateMotive& m, int k) {
  std::vector<SplitSummand> s = m.summands();
  for (auto& x : s) x.twist += k;
  return SplitTateMotive(std::move(s));
}

/// Bilinear extension of
///   A(q)[n] (x) A'(q')[n'] = (A(x)A')(q+q')[n+n'] + Tor(A,A')(q+q')[n+n'+1].
inline SplitTateMotive tensor(const SplitTateMotive& a, const SplitTateMotive& b) {
  std::vector<SplitSummand> out;
  for (const auto& x : a.summands())
    for (const auto& y : b.summands()) {
      GroupTensor t = tensor_with_tor(x.group, y.group);
      out.push_back({std::move(t.tensor), x.twist + y.twist, x.degree + y.degree});
      out.push_back({std::move(t.tor), x.twist + y.twist, x.degree + y.degree + 1});
    }
  return SplitTateMotive(std::move(out));
}

/// Weight filtration W_{<=n}: keeps summands of weight -twist <= n.
inline SplitTateMotive weight_truncate(const SplitTateMotive& m, int n) {
  std::vector<SplitSummand> out;
  for (const auto& s : m.summands())
    if (-s.twist <= n) out.push_back(s);
  return SplitTateMotive(std::move(out));
}

/// Weight graded piece gr^W_n: summands of weight -twist = n exactly.
inline SplitTateMotive weight_graded(const SplitTateMotive& m, int n) {
  std::vector<SplitSummand> out;
  for (const auto& s : m.summands())
    if (-s.twist == n) out.push_back(s);
  return SplitTateMotive(std::move(out));
}

/// t-structure truncation t_{<d}. For split objects every weight graded
/// piece has homology exactly in its summand degrees, so truncation is
/// summand selection.
inline SplitTateMotive truncate_below(const SplitTateMotive& m, int d) {
  std::vector<SplitSummand> out;
  for (const auto& s : m.summands())
    if (s.degree < d) out.push_back(s);
  return SplitTateMotive(std::move(out));
}

/// t-structure truncation t_{>=d}.
inline SplitTateMotive truncate_geq(const SplitTateMotive& m, int d) {
  std::vector<SplitSummand> out;
  for (const auto& s : m.summands())
    if (s.degree >= d) out.push_back(s);
  return SplitTateMotive(std::move(out));
}

/// Graded abelian group, degree -> group; absent degrees are trivial.
using GradedGroup = std::map<int, FgAbelianGroup>;

/// Betti realization of a split object: each summand A(q)[n]
/// contributes A in degree n, twists are forgotten.
inline GradedGroup betti_realization(const SplitTateMotive& m) {
  GradedGroup out;
  for (const auto& s : m.summands()) {
    auto it = out.find(s.degree);
    if (it == out.end())
      out.emplace(s.degree, s.group);
    else
      it->second = direct_sum(it->second, s.group);
  }
  return out;
}

/// Euler-style bridge to the Grothendieck-ring calculus: torsion has
/// rank 0 and contributes nothing.
inline TateClass euler_class(const SplitTateMotive& m) {
  TateClass c;
  for (const auto& s : m.summands()) {
    Int coeff(s.group.free_rank());
    if (s.degree % 2 != 0) coeff = -coeff;
    c += LaurentPoly::monomial(coeff, s.twist);
  }
  return c;
}

enum class HomVerdict { known_zero, known_z, unknown };

inline std::string to_string(HomVerdict v) {
  switch (v) {
    case HomVerdict::known_zero: return "KnownZero";
    case HomVerdict::known_z: return "KnownZ";
    case HomVerdict::unknown: return "Unknown";
  }
  throw std::logic_error("to_string: bad HomVerdict");
}

/// What is known about Hom(Z(i)[m], Z(j)[n]) between pure twists:
/// vanishing for j < i, rigidity on the diagonal, and the
/// Beilinson-Soule vanishing range out of Z(0)[0].
inline HomVerdict hom_verdict(int i, int m, int j, int n) {
  if (j < i) return HomVerdict::known_zero;
  if (i == j) return m == n ? HomVerdict::known_z : HomVerdict::known_zero;
  if (i == 0 && m == 0) {
    if ((j >= 0 && n < 0) || (j > 0 && n <= 0)) return HomVerdict::known_zero;
  }
  return HomVerdict::unknown;
}

inline std::string to_string(const SplitTateMotive& m) {
  if (m.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& s : m.summands()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(s.group) << ")(" << s.twist << ")[" << s.degree << "]";
  }
  return out.str();
}

}  // namespace mtw
