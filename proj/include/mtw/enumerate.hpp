#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "mtw/schemes.hpp"

namespace mtw {

enum class CountMethod { brute, formula, class_specialization };

inline std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::formula: return "formula";
    case CountMethod::class_specialization: return "class-specialization";
  }
  throw std::logic_error("to_string: bad CountMethod");
}

inline CountMethod count_method_from_string(const std::string& s) {
  if (s == "brute") return CountMethod::brute;
  if (s == "formula") return CountMethod::formula;
  if (s == "class-specialization") return CountMethod::class_specialization;
  throw std::invalid_argument("unknown count method: " + s);
}

/// One point count of a family over F_p.
struct CountRecord {
  FamilySpec family;
  std::uint32_t p = 2;
  std::uint64_t count = 0;
  CountMethod method = CountMethod::brute;
  std::string produced_at;  // ISO-8601 UTC
};

inline std::string utc_timestamp_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[72];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

/// Size of the coefficient-tuple space, p^(d*m), guarded at 10^8.
inline std::uint64_t tuple_space_size(const FamilySpec& spec, std::uint32_t p) {
  spec.validate();
  if (!is_prime_u32(p)) throw std::invalid_argument("tuple_space_size: p must be prime");
  constexpr std::uint64_t kGuardRail = 100'000'000;
  std::uint64_t n = 1;
  for (int i = 0; i < spec.d * spec.m; ++i) {
    n *= p;
    if (n > kGuardRail)
      throw guard_rail_error("enumeration guard rail exceeded: p^(d*m) > 10^8");
  }
  return n;
}

namespace detail {

/// Counts family members with tuple index in [lo, hi). The pinned order
/// flattens the tuple as (poly 0 coefficients ascending, poly 1, ...)
/// and makes the first coordinate the most significant base-p digit.
inline std::uint64_t count_block(const FamilySpec& spec, std::uint32_t p, std::uint64_t lo,
                                 std::uint64_t hi, const IrreducibleTable* table) {
  const auto dom = CoefficientDomain::prime_field(p);
  const int n_coord = spec.d * spec.m;
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(n_coord), 0);
  std::uint64_t rem = lo;
  for (int j = n_coord - 1; j >= 0; --j) {
    digits[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(rem % p);
    rem /= p;
  }

  std::uint64_t count = 0;
  for (std::uint64_t k = lo; k < hi; ++k) {
    std::vector<Poly> tuple;
    tuple.reserve(static_cast<std::size_t>(spec.m));
    for (int i = 0; i < spec.m; ++i) {
      std::vector<Int> coeffs(static_cast<std::size_t>(spec.d) + 1);
      for (int t = 0; t < spec.d; ++t)
        coeffs[static_cast<std::size_t>(t)] = digits[static_cast<std::size_t>(i * spec.d + t)];
      coeffs.back() = 1;
      tuple.emplace_back(dom, std::move(coeffs));
    }
    if (in_family(tuple, spec, table)) ++count;

    int j = n_coord - 1;
    while (j >= 0 && ++digits[static_cast<std::size_t>(j)] == p) {
      digits[static_cast<std::size_t>(j)] = 0;
      --j;
    }
  }
  return count;
}

}  // namespace detail

/// Exhaustive count over contiguous lexicographic blocks, reduced by
/// addition; every partitioning yields the same record.
inline CountRecord count_partitioned(const FamilySpec& spec, std::uint32_t p, int parts) {
  if (parts < 1) throw std::invalid_argument("count_partitioned: parts must be >= 1");
  const std::uint64_t n = tuple_space_size(spec, p);

  std::optional<IrreducibleTable> table;
  if (spec.nu >= 2 && spec.d / spec.nu >= 1) table.emplace(p, spec.d / spec.nu);
  const IrreducibleTable* table_ptr = table ? &*table : nullptr;

  std::uint64_t total = 0;
  if (parts == 1) {
    total = detail::count_block(spec, p, 0, n, table_ptr);
  } else {
    // Blocks run in bounded waves; the reduction order is fixed by the
    // block index, so the result is independent of scheduling.
    constexpr int kMaxInFlight = 32;
    for (int base = 0; base < parts; base += kMaxInFlight) {
      const int end = std::min(parts, base + kMaxInFlight);
      std::vector<std::future<std::uint64_t>> wave;
      wave.reserve(static_cast<std::size_t>(end - base));
      for (int i = base; i < end; ++i) {
        const std::uint64_t lo =
            n * static_cast<std::uint64_t>(i) / static_cast<std::uint64_t>(parts);
        const std::uint64_t hi =
            n * static_cast<std::uint64_t>(i + 1) / static_cast<std::uint64_t>(parts);
        wave.push_back(std::async(std::launch::async, [spec, p, lo, hi, table_ptr] {
          return detail::count_block(spec, p, lo, hi, table_ptr);
        }));
      }
      for (auto& b : wave) total += b.get();
    }
  }
  return {spec, p, total, CountMethod::brute, utc_timestamp_now()};
}

/// Exact cardinality of the family over F_p by exhaustive iteration.
inline CountRecord count_points(const FamilySpec& spec, std::uint32_t p) {
  return count_partitioned(spec, p, 1);
}

}  // namespace mtw
