#pragma once

#include <stdexcept>
#include <vector>

#include "mtw/matrix.hpp"
#include "mtw/poly.hpp"

namespace mtw {

/// Sylvester matrix of size deg f + deg g: the first deg g rows hold
/// shifted coefficients of f in descending order, the remaining deg f
/// rows those of g.
inline ExactMatrix sylvester_matrix(const Poly& f, const Poly& g) {
  require_same_domain(f.domain(), g.domain());
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("sylvester_matrix: inputs must be nonzero");
  const int df = f.degree(), dg = g.degree();
  if (df < 1 && dg < 1)
    throw std::invalid_argument("sylvester_matrix: both inputs are constant");
  ExactMatrix s(f.domain(), static_cast<std::size_t>(df + dg), static_cast<std::size_t>(df + dg));
  for (int r = 0; r < dg; ++r)
    for (int i = 0; i <= df; ++i) s.set(r, r + i, f.coeff(df - i));
  for (int r = 0; r < df; ++r)
    for (int i = 0; i <= dg; ++i) s.set(dg + r, r + i, g.coeff(dg - i));
  return s;
}

/// Resultant as the Sylvester determinant. For monic f this equals the
/// product of g over the roots of f in any splitting extension.
inline Int resultant(const Poly& f, const Poly& g) { return det(sylvester_matrix(f, g)); }

/// d x d Bezout matrix of two monic degree-d polynomials: coefficients
/// of the Cayley quotient (f(x)g(y) - f(y)g(x)) / (x - y) in the
/// monomial basis, entry (i, j) belonging to x^i y^j.
inline ExactMatrix bezout_matrix(const Poly& f, const Poly& g) {
  require_same_domain(f.domain(), g.domain());
  const int d = f.degree();
  if (d < 1 || g.degree() != d)
    throw std::invalid_argument("bezout_matrix: need equal degrees >= 1");
  if (!f.is_monic() || !g.is_monic())
    throw std::invalid_argument("bezout_matrix: inputs must be monic");
  const CoefficientDomain& dom = f.domain();

  // Numerator as a polynomial in x with coefficients in dom[y]:
  // f(x)g(y) - f(y)g(x) = sum_k x^k (f_k g(y) - g_k f(y)).
  std::vector<Poly> numer;
  numer.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) numer.push_back(g * f.coeff(k) - f * g.coeff(k));

  // Synthetic division by (x - y), monic in x.
  const Poly y = Poly::x(dom);
  std::vector<Poly> quot(static_cast<std::size_t>(d), Poly::zero(dom));
  quot[static_cast<std::size_t>(d - 1)] = numer[static_cast<std::size_t>(d)];
  for (int k = d - 1; k >= 1; --k)
    quot[static_cast<std::size_t>(k - 1)] =
        numer[static_cast<std::size_t>(k)] + y * quot[static_cast<std::size_t>(k)];
  if (!(numer[0] + y * quot[0]).is_zero())
    throw std::logic_error("bezout_matrix: Cayley quotient division left a remainder");

  ExactMatrix b(dom, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      b.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
            quot[static_cast<std::size_t>(i)].coeff(j));
  return b;
}

}  // namespace mtw
