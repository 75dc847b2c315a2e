#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mtw/domain.hpp"

namespace mtw {

/// Sparse Laurent polynomial in one symbol with arbitrary-precision
/// integer coefficients. Zero coefficients are never stored, so the
/// exponent-sorted term map is a canonical form.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(Int c) { return monomial(std::move(c), 0); }

  static LaurentPoly monomial(Int c, int exp) {
    LaurentPoly r;
    if (c != 0) r.terms_[exp] = std::move(c);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Int>& terms() const { return terms_; }

  Int coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }

  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a += -b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void add_term(int exp, const Int& c) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      if (c != 0) terms_[exp] = c;
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  std::map<int, Int> terms_;
};

/// Exact evaluation at an integer point. Requires no negative exponents
/// when q = 0, and an integral result otherwise.
inline Int evaluate(const LaurentPoly& c, const Int& q) {
  if (c.is_zero()) return 0;
  const int lo = c.terms().begin()->first;
  if (q == 0) {
    if (lo < 0) throw std::domain_error("evaluate: negative exponent at q = 0");
    return c.coeff(0);
  }
  const int shift = lo < 0 ? -lo : 0;
  Int num = 0;
  for (const auto& [e, coeff] : c.terms())
    num += coeff * boost::multiprecision::pow(q, static_cast<unsigned>(e + shift));
  if (shift == 0) return num;
  const Int denom = boost::multiprecision::pow(q, static_cast<unsigned>(shift));
  if (num % denom != 0)
    throw std::domain_error("evaluate: value is not an integer at this point");
  return num / denom;
}

inline std::string to_string(const LaurentPoly& c, const std::string& symbol = "L") {
  if (c.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    const auto& [e, coeff] = *it;
    Int mag = coeff < 0 ? Int(-coeff) : coeff;
    if (first) {
      if (coeff < 0) out << "-";
      first = false;
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    if (mag != 1 || e == 0) out << mag.str();
    if (e != 0) {
      out << symbol;
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace mtw
