#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtw {

/// Finitely generated abelian group in normal form: a free rank plus the
/// ascending chain of invariant factors d_1 | d_2 | ... (each >= 2). The
/// normal form is unique per isomorphism class, so equality of the
/// stored data is isomorphism.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;

  /// Normalizes an arbitrary direct sum Z^rank + Z/orders[0] + ... into
  /// invariant factors. Orders must be >= 1; order 1 summands vanish.
  FgAbelianGroup(std::int64_t free_rank, const std::vector<std::int64_t>& cyclic_orders)
      : free_rank_(free_rank) {
    if (free_rank < 0) throw std::invalid_argument("FgAbelianGroup: negative free rank");
    std::map<std::int64_t, std::vector<int>> exponents;  // prime -> exponents, one per summand
    for (std::int64_t n : cyclic_orders) {
      if (n < 1) throw std::invalid_argument("FgAbelianGroup: cyclic order must be >= 1");
      for (const auto& [p, e] : factorize(n)) exponents[p].push_back(e);
    }
    std::size_t chain_len = 0;
    for (auto& [p, es] : exponents) {
      std::sort(es.begin(), es.end());
      chain_len = std::max(chain_len, es.size());
    }
    factors_.assign(chain_len, 1);
    for (const auto& [p, es] : exponents) {
      // Align each prime's exponents at the top of the chain so the
      // divisibility d_1 | d_2 | ... holds.
      const std::size_t offset = chain_len - es.size();
      for (std::size_t i = 0; i < es.size(); ++i)
        for (int k = 0; k < es[i]; ++k) factors_[offset + i] *= p;
    }
  }

  static FgAbelianGroup trivial() { return {}; }
  static FgAbelianGroup free_of_rank(std::int64_t r) { return {r, {}}; }
  static FgAbelianGroup cyclic(std::int64_t n) { return {0, {n}}; }

  std::int64_t free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }

  friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.factors_ == b.factors_;
  }

  friend bool operator<(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    if (a.free_rank_ != b.free_rank_) return a.free_rank_ < b.free_rank_;
    return a.factors_ < b.factors_;
  }

 private:
  static std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t q = 2; q <= n / q; ++q) {
      if (n % q) continue;
      int e = 0;
      while (n % q == 0) {
        n /= q;
        ++e;
      }
      out.emplace_back(q, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
  }

  std::int64_t free_rank_ = 0;
  std::vector<std::int64_t> factors_;
};

inline FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<std::int64_t> orders = a.invariant_factors();
  orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return {a.free_rank() + b.free_rank(), orders};
}

struct GroupTensor {
  FgAbelianGroup tensor;
  FgAbelianGroup tor;
};

/// Tensor product and Tor of two groups in normal form, from the
/// structure theorem: Z/a x Z/b contributes Z/gcd(a,b) to both, the free
/// parts tensor freely and contribute nothing to Tor.
inline GroupTensor tensor_with_tor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  const auto& as = a.invariant_factors();
  const auto& bs = b.invariant_factors();
  std::vector<std::int64_t> tensor_orders;
  std::vector<std::int64_t> tor_orders;
  for (std::int64_t x : as)
    for (std::int64_t i = 0; i < b.free_rank(); ++i) tensor_orders.push_back(x);
  for (std::int64_t y : bs)
    for (std::int64_t i = 0; i < a.free_rank(); ++i) tensor_orders.push_back(y);
  for (std::int64_t x : as)
    for (std::int64_t y : bs) {
      const std::int64_t g = std::gcd(x, y);
      tensor_orders.push_back(g);
      tor_orders.push_back(g);
    }
  return {FgAbelianGroup(a.free_rank() * b.free_rank(), tensor_orders),
          FgAbelianGroup(0, tor_orders)};
}

inline std::string to_string(const FgAbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " + ";
    first = false;
  };
  if (g.free_rank() == 1) {
    sep();
    out << "Z";
  } else if (g.free_rank() > 1) {
    sep();
    out << "Z^" << g.free_rank();
  }
  for (std::int64_t d : g.invariant_factors()) {
    sep();
    out << "Z/" << d;
  }
  return out.str();
}

}  // namespace mtw
