#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mtw/enumerate.hpp"
#include "mtw/schemes.hpp"
#include "mtw/tate_class.hpp"

namespace mtw {

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string counterexample;  // first failure only

  bool passed() const { return failures == 0; }
};

namespace detail {

inline void record_failure(CheckResult& r, const std::string& what) {
  ++r.failures;
  if (r.counterexample.empty()) r.counterexample = what;
}

/// Walks all monic polynomials of the given degree over F_p.
template <typename Fn>
void for_each_monic(const CoefficientDomain& dom, int degree, Fn&& fn) {
  const std::uint64_t p = dom.characteristic();
  std::uint64_t n = 1;
  for (int i = 0; i < degree; ++i) n *= p;
  for (std::uint64_t t = 0; t < n; ++t) {
    std::vector<Int> coeffs(static_cast<std::size_t>(degree) + 1);
    std::uint64_t rem = t;
    for (int i = 0; i < degree; ++i) {
      coeffs[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rem % p);
      rem /= p;
    }
    coeffs.back() = 1;
    fn(Poly(dom, std::move(coeffs)));
  }
}

inline Poly random_poly(std::mt19937_64& rng, const CoefficientDomain& dom, int degree,
                        bool monic, int coeff_bound) {
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::vector<Int> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = coeff(rng);
  if (monic) {
    c.back() = 1;
  } else {
    int lead = coeff(rng);
    if (lead == 0) lead = 1;
    c.back() = lead;
  }
  return {dom, std::move(c)};
}

inline Poly reduce_mod_p(const Poly& f, const CoefficientDomain& fp) {
  return {fp, f.coeffs()};
}

}  // namespace detail

/// Exhaustive equivalence of the two squarefreeness routes (resultant of
/// the scanned pair vs gcd with the derivative), plus the coordinate
/// form of the scanning map on random integer polynomials.
inline std::vector<CheckResult> verify_scan(int max_d, const std::vector<std::uint32_t>& primes,
                                            int coord_trials, std::uint64_t seed = 20240811) {
  if (max_d < 0) throw std::invalid_argument("verify_scan: max_d must be >= 0");
  CheckResult equiv{"scan-equivalence"};
  for (std::uint32_t p : primes) {
    const auto dom = CoefficientDomain::prime_field(p);
    std::uint64_t grid = 0, power = 1;
    for (int d = 0; d <= max_d; ++d) {
      grid += power;
      power *= p;
      if (grid > 2'000'000)
        throw guard_rail_error("verify_scan: exhaustive grid exceeds 2*10^6 polynomials");
    }
    for (int d = 0; d <= max_d; ++d) {
      detail::for_each_monic(dom, d, [&](const Poly& f) {
        ++equiv.cases;
        const bool via_scan = coprime_with_derivative(f);
        const bool via_gcd = gcd(f, derivative(f)).degree() == 0;
        bool ok = via_scan == via_gcd;
        if (ok && d >= 1) ok = via_scan == coprime_pair(f, f + derivative(f));
        if (!ok)
          detail::record_failure(equiv, "p=" + std::to_string(p) + " f=" + to_string(f));
      });
    }
  }

  CheckResult coords{"scan-coordinates"};
  std::mt19937_64 rng(seed);
  const auto z = CoefficientDomain::integers();
  for (int d = 1; d <= 6; ++d) {
    for (int t = 0; t < coord_trials; ++t) {
      const Poly f = detail::random_poly(rng, z, d, true, 50);
      const auto [first, second] = scan(f);
      ++coords.cases;
      bool ok = first == f && second.degree() == d && second.is_monic();
      for (int i = 0; ok && i < d; ++i) {
        const Int expected = f.coeff(i) + Int(i + 1) * f.coeff(i + 1);
        ok = second.coeff(i) == expected;
      }
      if (!ok) detail::record_failure(coords, "d=" + std::to_string(d) + " f=" + to_string(f));
    }
  }
  return {equiv, coords};
}

/// Stratification recursion against brute force: the specialized class
/// of every family on the grid equals the exhaustive point count.
inline std::vector<CheckResult> verify_recursion(int max_d,
                                                 const std::vector<std::uint32_t>& primes) {
  CheckResult check{"class-specialization-vs-brute-count"};
  for (int nu = 1; nu <= 3; ++nu)
    for (int m = 1; m <= 2; ++m)
      for (int d = 0; d <= max_d; ++d) {
        const FamilySpec spec{nu, m, d};
        const TateClass cls = family_class(spec);
        for (std::uint32_t p : primes) {
          ++check.cases;
          const Int expected = specialize(cls, Int(p));
          const std::uint64_t actual = count_points(spec, p).count;
          if (expected != Int(actual))
            detail::record_failure(check, to_string(spec) + " p=" + std::to_string(p) +
                                              " class=" + expected.str() +
                                              " brute=" + std::to_string(actual));
        }
      }
  return {check};
}

/// Resultant identities: base change along Z -> F_p, multiplicativity in
/// the second argument, the root-product law for the scanned pair, and
/// the degree-only sign relating Bezout and Sylvester determinants.
inline std::vector<CheckResult> verify_resultant(int trials, std::uint64_t seed = 20240811) {
  std::mt19937_64 rng(seed);
  const auto z = CoefficientDomain::integers();

  CheckResult base_change{"base-change"};
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto fp = CoefficientDomain::prime_field(p);
    std::uniform_int_distribution<int> deg(1, 6);
    for (int t = 0; t < trials; ++t) {
      const Poly f = detail::random_poly(rng, z, deg(rng), true, 20);
      const Poly g = detail::random_poly(rng, z, deg(rng), true, 20);
      ++base_change.cases;
      const Int reduced_after = fp.reduce(resultant(f, g));
      const Int reduced_before =
          resultant(detail::reduce_mod_p(f, fp), detail::reduce_mod_p(g, fp));
      if (reduced_after != reduced_before)
        detail::record_failure(base_change, "p=" + std::to_string(p) + " f=" + to_string(f) +
                                                " g=" + to_string(g));
    }
  }

  CheckResult mult{"multiplicativity"};
  {
    std::uniform_int_distribution<int> fdeg(1, 4), gdeg(0, 3);
    for (int t = 0; t < trials / 2; ++t) {
      const Poly f = detail::random_poly(rng, z, fdeg(rng), true, 9);
      Poly g = detail::random_poly(rng, z, gdeg(rng), false, 9);
      Poly h = detail::random_poly(rng, z, gdeg(rng), false, 9);
      ++mult.cases;
      if (resultant(f, g * h) != resultant(f, g) * resultant(f, h))
        detail::record_failure(mult, "f=" + to_string(f) + " g=" + to_string(g) +
                                         " h=" + to_string(h));
    }
  }

  CheckResult root_product{"root-product-law"};
  {
    const auto f3 = CoefficientDomain::prime_field(3);
    for (int d = 1; d <= 3; ++d) {
      detail::for_each_monic(f3, d, [&](const Poly& f) {
        ++root_product.cases;
        const Poly fp = derivative(f);
        const Int via_scan = resultant(f, f + fp);
        const Int via_derivative = fp.is_zero() ? Int(0) : resultant(f, fp);
        if (via_scan != via_derivative)
          detail::record_failure(root_product, "f=" + to_string(f));
      });
    }
  }

  CheckResult bezout{"bezout-sylvester-sign"};
  {
    for (int d = 1; d <= 4; ++d) {
      int sign = 0;  // determined empirically from the first nonzero case
      for (int t = 0; t < trials / 2; ++t) {
        const Poly f = detail::random_poly(rng, z, d, true, 9);
        const Poly g = detail::random_poly(rng, z, d, true, 9);
        ++bezout.cases;
        const Int r = resultant(f, g);
        const Int b = det(bezout_matrix(f, g));
        bool ok;
        if (r == 0) {
          ok = b == 0;
        } else if (b == r) {
          ok = sign >= 0;
          sign = 1;
        } else if (b == -r) {
          ok = sign <= 0;
          sign = -1;
        } else {
          ok = false;
        }
        if (!ok)
          detail::record_failure(bezout, "d=" + std::to_string(d) + " f=" + to_string(f) +
                                             " g=" + to_string(g) + " res=" + r.str() +
                                             " bez=" + b.str());
      }
    }
  }

  return {base_change, mult, root_product, bezout};
}

}  // namespace mtw
