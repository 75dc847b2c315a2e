#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mtw/family.hpp"
#include "mtw/resultant.hpp"

namespace mtw {

/// Scanning map f |-> (f, f + f') on monic polynomials of degree >= 1.
inline std::pair<Poly, Poly> scan(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1)
    throw std::invalid_argument("scan: input must be monic of degree >= 1");
  return {f, f + derivative(f)};
}

/// Membership in the coprime-pair locus: the resultant is nonzero over a
/// prime field, a unit over the integers.
inline bool coprime_pair(const Poly& f, const Poly& g) {
  require_same_domain(f.domain(), g.domain());
  if (!f.is_monic() || !g.is_monic())
    throw std::invalid_argument("coprime_pair: inputs must be monic");
  if (f.degree() != g.degree() || f.degree() < 1)
    throw std::invalid_argument("coprime_pair: need equal degrees >= 1");
  return f.domain().is_unit(resultant(f, g));
}

/// Coprimality of f with its derivative, tested through the scanned
/// pair (f, f + f'). Degrees 0 and 1 are unconditionally in.
inline bool coprime_with_derivative(const Poly& f) {
  if (!f.is_monic())
    throw std::invalid_argument("coprime_with_derivative: input must be monic");
  if (f.degree() <= 1) return true;
  const auto [a, b] = scan(f);
  return coprime_pair(a, b);
}

/// All monic irreducible polynomials over F_p of degree <= max_deg,
/// found by trial division, ordered by degree and then by the numeric
/// value of the ascending coefficient tuple. Bounds p <= 7, max_deg <= 8
/// keep the table at desk scale.
class IrreducibleTable {
 public:
  IrreducibleTable(std::uint32_t p, int max_deg) : p_(p), max_deg_(max_deg) {
    if (p > 7 || max_deg > 8)
      throw guard_rail_error("IrreducibleTable: bounds are p <= 7, max_deg <= 8");
    const auto dom = CoefficientDomain::prime_field(p);
    for (int e = 1; e <= max_deg; ++e) {
      std::uint64_t n = 1;
      for (int i = 0; i < e; ++i) n *= p;
      for (std::uint64_t t = 0; t < n; ++t) {
        std::vector<Int> coeffs(static_cast<std::size_t>(e) + 1);
        std::uint64_t rem = t;
        for (int i = 0; i < e; ++i) {
          coeffs[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rem % p);
          rem /= p;
        }
        coeffs.back() = 1;
        Poly candidate(dom, std::move(coeffs));
        bool reducible = false;
        for (const Poly& pi : polys_) {
          if (2 * pi.degree() > e) break;
          if (divides(pi, candidate)) {
            reducible = true;
            break;
          }
        }
        if (!reducible) polys_.push_back(std::move(candidate));
      }
    }
  }

  std::uint32_t p() const { return p_; }
  int max_deg() const { return max_deg_; }
  const std::vector<Poly>& polys() const { return polys_; }

 private:
  std::uint32_t p_;
  int max_deg_;
  std::vector<Poly> polys_;  // sorted by degree, then enumeration order
};

inline std::vector<Poly> monic_irreducibles(std::uint32_t p, int max_deg) {
  if (max_deg < 1) return {};
  return IrreducibleTable(p, max_deg).polys();
}

/// True when pi^nu divides g for some irreducible pi; over the perfect
/// base field this is exactly "g has a root of multiplicity >= nu in the
/// algebraic closure". The table must cover degree floor(deg g / nu).
inline bool has_power_factor(const Poly& g, int nu, const IrreducibleTable& table) {
  if (!g.is_monic()) throw std::invalid_argument("has_power_factor: input must be monic");
  if (!g.domain().is_field())
    throw std::domain_error("has_power_factor: defined over prime fields only");
  if (nu < 1) throw std::invalid_argument("has_power_factor: nu must be >= 1");
  if (nu == 1) return g.degree() >= 1;
  const int max_pi = g.degree() / nu;
  if (max_pi < 1) return false;
  if (table.p() != g.domain().characteristic() || table.max_deg() < max_pi)
    throw std::invalid_argument("has_power_factor: irreducible table does not cover the input");
  for (const Poly& pi : table.polys()) {
    if (pi.degree() > max_pi) break;
    Poly power = pi;
    for (int i = 1; i < nu; ++i) power = power * pi;
    if (divides(power, g)) return true;
  }
  return false;
}

inline bool has_power_factor(const Poly& g, int nu) {
  if (!g.is_monic()) throw std::invalid_argument("has_power_factor: input must be monic");
  if (nu < 1) throw std::invalid_argument("has_power_factor: nu must be >= 1");
  if (nu == 1) return g.degree() >= 1;
  const int max_pi = g.degree() / nu;
  if (max_pi < 1) return false;
  return has_power_factor(g, nu, IrreducibleTable(g.domain().characteristic(), max_pi));
}

/// Family membership: the gcd of the tuple has no irreducible factor of
/// multiplicity >= nu. Vacuously true when d < nu.
inline bool in_family(const std::vector<Poly>& tuple, const FamilySpec& spec,
                      const IrreducibleTable* table = nullptr) {
  spec.validate();
  if (static_cast<int>(tuple.size()) != spec.m)
    throw std::invalid_argument("in_family: tuple length differs from m");
  const CoefficientDomain& dom = tuple.front().domain();
  if (!dom.is_field()) throw std::domain_error("in_family: defined over prime fields only");
  for (const Poly& f : tuple) {
    require_same_domain(dom, f.domain());
    if (!f.is_monic() || f.degree() != spec.d)
      throw std::invalid_argument("in_family: entries must be monic of degree exactly d");
  }
  Poly g = tuple.front();
  for (std::size_t i = 1; i < tuple.size(); ++i) g = gcd(g, tuple[i]);
  return table ? !has_power_factor(g, spec.nu, *table) : !has_power_factor(g, spec.nu);
}

/// A verified member of a family.
struct SchemePoint {
  FamilySpec family;
  std::vector<Poly> polys;
};

inline SchemePoint make_scheme_point(const FamilySpec& spec, std::vector<Poly> polys) {
  if (!in_family(polys, spec))
    throw std::invalid_argument("make_scheme_point: membership predicate fails");
  return {spec, std::move(polys)};
}

}  // namespace mtw
