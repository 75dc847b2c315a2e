#pragma once

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mtw/domain.hpp"

namespace mtw {

/// Dense univariate polynomial with exact coefficients stored ascending
/// by exponent (coeffs()[i] is the coefficient of x^i). The trailing
/// stored coefficient is nonzero; the zero polynomial stores nothing and
/// reports degree -1.
class Poly {
 public:
  explicit Poly(CoefficientDomain domain) : domain_(domain) {}

  Poly(CoefficientDomain domain, std::vector<Int> coeffs)
      : domain_(domain), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = domain_.reduce(c);
    trim();
  }

  static Poly zero(const CoefficientDomain& d) { return Poly(d); }
  static Poly one(const CoefficientDomain& d) { return {d, {Int(1)}}; }
  static Poly x(const CoefficientDomain& d) { return {d, {Int(0), Int(1)}}; }

  static Poly monomial(const CoefficientDomain& d, Int coeff, int exp) {
    if (exp < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
    std::vector<Int> c(static_cast<std::size_t>(exp) + 1);
    c.back() = std::move(coeff);
    return {d, std::move(c)};
  }

  /// Convenience constructor from small ascending coefficients.
  static Poly from_ints(const CoefficientDomain& d, std::initializer_list<long long> ascending) {
    std::vector<Int> c;
    c.reserve(ascending.size());
    for (long long v : ascending) c.emplace_back(v);
    return {d, std::move(c)};
  }

  const CoefficientDomain& domain() const { return domain_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Int coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Int(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int leading() const { return is_zero() ? Int(0) : coeffs_.back(); }

  Int eval(const Int& point) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = domain_.reduce(acc * point + *it);
    return acc;
  }

  friend Poly operator+(const Poly& f, const Poly& g) {
    require_same_domain(f.domain_, g.domain_);
    std::vector<Int> c(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = f.coeff(static_cast<int>(i)) + g.coeff(static_cast<int>(i));
    return {f.domain_, std::move(c)};
  }

  friend Poly operator-(const Poly& f) {
    std::vector<Int> c(f.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -f.coeffs_[i];
    return {f.domain_, std::move(c)};
  }

  friend Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

  friend Poly operator*(const Poly& f, const Poly& g) {
    require_same_domain(f.domain_, g.domain_);
    if (f.is_zero() || g.is_zero()) return Poly(f.domain_);
    std::vector<Int> c(f.coeffs_.size() + g.coeffs_.size() - 1);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
        c[i + j] += f.coeffs_[i] * g.coeffs_[j];
    return {f.domain_, std::move(c)};
  }

  friend Poly operator*(const Poly& f, const Int& s) {
    std::vector<Int> c(f.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeffs_[i] * s;
    return {f.domain_, std::move(c)};
  }

  friend Poly operator*(const Int& s, const Poly& f) { return f * s; }

  friend bool operator==(const Poly& f, const Poly& g) {
    return f.domain_ == g.domain_ && f.coeffs_ == g.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  CoefficientDomain domain_;
  std::vector<Int> coeffs_;
};

/// Formal derivative; coefficients i * c_i reduced in the domain.
inline Poly derivative(const Poly& f) {
  if (f.degree() < 1) return Poly::zero(f.domain());
  std::vector<Int> c(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i) c[static_cast<std::size_t>(i - 1)] = f.coeff(i) * i;
  return {f.domain(), std::move(c)};
}

/// Long division f = q*g + r with deg r < deg g. Requires a field
/// domain or a monic divisor.
inline std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  require_same_domain(f.domain(), g.domain());
  if (g.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  const CoefficientDomain& dom = f.domain();
  if (!dom.is_field() && !g.is_monic())
    throw std::domain_error("divmod: over the integers the divisor must be monic");
  const int dg = g.degree();
  if (f.degree() < dg) return {Poly::zero(dom), f};

  const Int lead_inv = g.is_monic() ? Int(1) : dom.inv(g.leading());
  std::vector<Int> rem(f.coeffs());
  std::vector<Int> quot(static_cast<std::size_t>(f.degree() - dg) + 1);
  for (int k = f.degree(); k >= dg; --k) {
    Int factor = dom.mul(rem[static_cast<std::size_t>(k)], lead_inv);
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(k - dg)] = factor;
    for (int i = 0; i <= dg; ++i) {
      auto& slot = rem[static_cast<std::size_t>(k - dg + i)];
      slot = dom.sub(slot, factor * g.coeff(i));
    }
  }
  return {Poly(dom, std::move(quot)), Poly(dom, std::move(rem))};
}

inline bool divides(const Poly& g, const Poly& f) { return divmod(f, g).second.is_zero(); }

/// Monic greatest common divisor over a prime field.
inline Poly gcd(const Poly& f, const Poly& g) {
  require_same_domain(f.domain(), g.domain());
  const CoefficientDomain& dom = f.domain();
  if (!dom.is_field()) throw std::domain_error("gcd: defined over prime fields only");
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd: both inputs are zero");
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a * dom.inv(a.leading());
}

inline std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    Int c = f.coeff(i);
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag.str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

}  // namespace mtw
