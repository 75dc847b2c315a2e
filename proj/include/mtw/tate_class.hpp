#pragma once

#include <stdexcept>
#include <vector>

#include "mtw/family.hpp"
#include "mtw/laurent.hpp"

namespace mtw {

/// Grothendieck-ring class of a variety, written as a Laurent polynomial
/// in the Lefschetz class L. Substituting L = q recovers the point count
/// over F_q.
using TateClass = LaurentPoly;

inline TateClass affine_class(int n) {
  if (n < 0) throw std::invalid_argument("affine_class: n must be >= 0");
  return LaurentPoly::monomial(Int(1), n);
}

inline TateClass projective_class(int n) {
  if (n < 0) throw std::invalid_argument("projective_class: n must be >= 0");
  LaurentPoly c;
  for (int i = 0; i <= n; ++i) c += LaurentPoly::monomial(Int(1), i);
  return c;
}

/// Scissor relation for an open complement U = X - Z with Z closed of
/// the given codimension: [U] = [X] - L^codim [Z].
inline TateClass complement_class(const TateClass& ambient, const TateClass& closed, int codim) {
  if (codim < 1) throw std::invalid_argument("complement_class: codimension must be >= 1");
  return ambient - LaurentPoly::monomial(Int(1), codim) * closed;
}

/// Class of the family (nu, m, d): the unique solution of
///   L^(d*m) = sum over k >= 0 with d - k*nu >= 0 of L^k * class(nu, m, d - k*nu)
/// with class = L^(d*m) whenever d < nu, computed by induction on d.
inline TateClass family_class(const FamilySpec& spec) {
  spec.validate();
  std::vector<TateClass> classes(static_cast<std::size_t>(spec.d) + 1);
  for (int dd = 0; dd <= spec.d; ++dd) {
    TateClass c = LaurentPoly::monomial(Int(1), dd * spec.m);
    for (int k = 1; dd - k * spec.nu >= 0; ++k)
      c = c - LaurentPoly::monomial(Int(1), k) * classes[static_cast<std::size_t>(dd - k * spec.nu)];
    classes[static_cast<std::size_t>(dd)] = c;
  }
  return classes[static_cast<std::size_t>(spec.d)];
}

/// Substitute L = q and evaluate exactly.
inline Int specialize(const TateClass& c, const Int& q) { return evaluate(c, q); }

}  // namespace mtw
