#pragma once

#include <stdexcept>
#include <string>

namespace mtw {

/// Parameters of one configuration family: tuples of m monic degree-d
/// polynomials whose gcd has no irreducible factor of multiplicity
/// >= nu. (nu, m) = (1, 2) is the coprime-pair family, (2, 1) the
/// squarefree family.
struct FamilySpec {
  int nu = 1;  ///< multiplicity bound
  int m = 1;   ///< tuple length
  int d = 0;   ///< common degree

  void validate() const {
    if (nu < 1 || m < 1 || d < 0)
      throw std::invalid_argument("FamilySpec: need nu >= 1, m >= 1, d >= 0");
  }

  friend bool operator==(const FamilySpec& a, const FamilySpec& b) {
    return a.nu == b.nu && a.m == b.m && a.d == b.d;
  }
};

inline std::string to_string(const FamilySpec& s) {
  return "Poly(nu=" + std::to_string(s.nu) + ", m=" + std::to_string(s.m) +
         ", d=" + std::to_string(s.d) + ")";
}

}  // namespace mtw
