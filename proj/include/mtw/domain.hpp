#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace mtw {

/// Arbitrary-precision integer used for every exact computation.
using Int = boost::multiprecision::cpp_int;

/// A desk-scale resource bound was exceeded (enumeration guard rail,
/// irreducible-table limits). The CLI reports this as exit code 2.
class guard_rail_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q = 2; static_cast<std::uint64_t>(q) * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

/// Coefficient ring of the workbench: the integers or a prime field F_p
/// with p < 2^31. Arithmetic is exact; prime-field values are kept
/// reduced to the canonical representative in [0, p).
class CoefficientDomain {
 public:
  enum class Kind { integers, prime_field };

  static CoefficientDomain integers() { return {Kind::integers, 0}; }

  static CoefficientDomain prime_field(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
      throw std::invalid_argument("prime_field: modulus must be a prime below 2^31");
    return {Kind::prime_field, p};
  }

  Kind kind() const { return kind_; }
  bool is_field() const { return kind_ == Kind::prime_field; }

  /// 0 over the integers, p over F_p.
  std::uint32_t characteristic() const { return p_; }

  Int reduce(Int v) const {
    if (kind_ == Kind::integers) return v;
    v %= p_;
    if (v < 0) v += p_;
    return v;
  }

  Int add(const Int& a, const Int& b) const { return reduce(a + b); }
  Int sub(const Int& a, const Int& b) const { return reduce(a - b); }
  Int mul(const Int& a, const Int& b) const { return reduce(a * b); }
  Int neg(const Int& a) const { return reduce(-a); }

  bool is_unit(const Int& a) const {
    if (kind_ == Kind::integers) return a == 1 || a == -1;
    return reduce(a) != 0;
  }

  Int inv(const Int& a) const {
    if (!is_field()) throw std::domain_error("inv: the integers are not a field");
    const std::int64_t av = reduce(a).convert_to<std::int64_t>();
    if (av == 0) throw std::domain_error("inv: zero is not invertible");
    std::int64_t t = 0, next_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), next_r = av;
    while (next_r != 0) {
      const std::int64_t q = r / next_r;
      t = std::exchange(next_t, t - q * next_t);
      r = std::exchange(next_r, r - q * next_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Int(t);
  }

  friend bool operator==(const CoefficientDomain& a, const CoefficientDomain& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  CoefficientDomain(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

inline void require_same_domain(const CoefficientDomain& a, const CoefficientDomain& b) {
  if (!(a == b)) throw std::domain_error("operands live in different coefficient domains");
}

}  // namespace mtw
