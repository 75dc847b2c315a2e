// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure. Criteria 1-7 drive the library directly; criterion 8
// drives the CLI binary named by MTW_CLI (falling back to ./tools/mtw).

#include <unistd.h>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtw/cache.hpp"
#include "mtw/enumerate.hpp"
#include "mtw/motive.hpp"
#include "mtw/motive_json.hpp"
#include "mtw/stability.hpp"
#include "mtw/tate_class.hpp"
#include "mtw/verify.hpp"

#include "subprocess.hpp"

namespace {

using mtw::FamilySpec;
using mtw::FgAbelianGroup;
using mtw::Int;
using mtw::LaurentPoly;
using mtw::SplitSummand;
using mtw::SplitTateMotive;

std::uint64_t upow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& what) {
    pass = false;
    if (detail.empty()) detail = what;
  }
  void require(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

// --- criterion 1: squarefree counts -----------------------------------

Outcome squarefree_counts() {
  Outcome out;
  for (int d = 2; d <= 5; ++d)
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const std::uint64_t expected = upow(p, d) - upow(p, d - 1);
      const std::uint64_t got = mtw::count_points(FamilySpec{2, 1, d}, p).count;
      out.require(got == expected, "d=" + std::to_string(d) + " p=" + std::to_string(p) +
                                       ": got " + std::to_string(got) + ", expected " +
                                       std::to_string(expected));
    }
  return out;
}

// --- criterion 2: coprime-pair counts ----------------------------------

Outcome coprime_pair_counts() {
  Outcome out;
  for (int d = 1; d <= 3; ++d)
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const std::uint64_t expected = upow(p, 2 * d) - upow(p, 2 * d - 1);
      const std::uint64_t got = mtw::count_points(FamilySpec{1, 2, d}, p).count;
      out.require(got == expected, "d=" + std::to_string(d) + " p=" + std::to_string(p) +
                                       ": got " + std::to_string(got) + ", expected " +
                                       std::to_string(expected));
    }
  return out;
}

// --- criterion 3: recursion vs brute force -----------------------------

Outcome recursion_vs_brute() {
  Outcome out;
  for (int nu = 1; nu <= 3; ++nu)
    for (int m = 1; m <= 2; ++m)
      for (int d = 0; d <= 4; ++d)
        for (std::uint32_t p : {2u, 3u}) {
          const FamilySpec spec{nu, m, d};
          const Int from_class = mtw::specialize(mtw::family_class(spec), Int(p));
          const std::uint64_t brute = mtw::count_points(spec, p).count;
          out.require(from_class == Int(brute),
                      to_string(spec) + " p=" + std::to_string(p) + ": class " +
                          from_class.str() + " vs brute " + std::to_string(brute));
        }
  return out;
}

// --- criterion 4: scanning equivalence ---------------------------------

Outcome scanning_equivalence() {
  Outcome out;
  for (const auto& check : mtw::verify_scan(4, {2, 3, 5}, 200))
    out.require(check.failures == 0,
                check.name + ": " + std::to_string(check.failures) + " failures, first " +
                    check.counterexample);
  return out;
}

// --- criterion 5: resultant suite --------------------------------------

Outcome resultant_suite() {
  Outcome out;
  for (const auto& check : mtw::verify_resultant(1000))
    out.require(check.failures == 0,
                check.name + ": " + std::to_string(check.failures) + " failures, first " +
                    check.counterexample);
  return out;
}

// --- criterion 6: motive engine suite -----------------------------------

FgAbelianGroup random_group(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rank(0, 1), n_tor(0, 2), order(2, 8);
  std::vector<std::int64_t> torsion;
  for (int i = n_tor(rng); i > 0; --i) torsion.push_back(order(rng));
  return {rank(rng), torsion};
}

SplitTateMotive random_motive(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_summands(0, 3), qn(-3, 3);
  std::vector<SplitSummand> s;
  for (int i = n_summands(rng); i > 0; --i) s.push_back({random_group(rng), qn(rng), qn(rng)});
  return SplitTateMotive(std::move(s));
}

Outcome motive_engine_suite() {
  Outcome out;
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<int> cut(-3, 5);

  for (int t = 0; t < 1000; ++t) {
    const SplitTateMotive m = random_motive(rng);
    const int d = cut(rng);
    out.require(direct_sum(truncate_geq(m, d), truncate_below(m, d)) == m,
                "truncation triangle fails at t=" + std::to_string(t));
    out.require(truncate_below(truncate_below(m, d), d) == truncate_below(m, d),
                "truncation idempotence fails at t=" + std::to_string(t));
  }

  for (int t = 0; t < 500; ++t) {
    const SplitTateMotive a = random_motive(rng);
    const SplitTateMotive b = random_motive(rng);
    const auto ga = betti_realization(a);
    const auto gb = betti_realization(b);
    mtw::GradedGroup expected;
    auto add_in = [&](int degree, const FgAbelianGroup& g) {
      if (g.is_trivial()) return;
      auto it = expected.find(degree);
      if (it == expected.end())
        expected.emplace(degree, g);
      else
        it->second = direct_sum(it->second, g);
    };
    for (const auto& [da, xa] : ga)
      for (const auto& [db, xb] : gb) {
        const auto prod = tensor_with_tor(xa, xb);
        add_in(da + db, prod.tensor);
        add_in(da + db + 1, prod.tor);
      }
    out.require(betti_realization(tensor(a, b)) == expected,
                "realization monoidality fails at t=" + std::to_string(t));
  }

  for (int t = 0; t < 500; ++t) {
    const SplitTateMotive m = random_motive(rng);
    const int d = cut(rng);
    for (const auto& [deg, g] : betti_realization(truncate_below(m, d)))
      out.require(deg < d && !g.is_trivial(), "B-compatibility (below) fails");
    for (const auto& [deg, g] : betti_realization(truncate_geq(m, d)))
      out.require(deg >= d && !g.is_trivial(), "B-compatibility (geq) fails");
    out.require(betti_realization(m).empty() == m.is_zero(), "B does not reflect zero");
  }

  for (int n = 0; n <= 5; ++n) {
    SplitTateMotive pn;
    for (int i = 0; i <= n; ++i)
      pn = direct_sum(pn, SplitTateMotive::summand(FgAbelianGroup::free_of_rank(1), i, 2 * i));
    out.require(euler_class(pn) == mtw::projective_class(n),
                "euler class of the projective model fails at n=" + std::to_string(n));
  }

  for (int i = -3; i <= 3; ++i)
    for (int m = -3; m <= 3; ++m)
      for (int j = -3; j <= 3; ++j)
        for (int n = -3; n <= 3; ++n) {
          bool says_zero = false, says_z = false;
          if (j < i) says_zero = true;
          if (i == j && m != n) says_zero = true;
          if (i == j && m == n) says_z = true;
          if (i == 0 && m == 0 && ((j >= 0 && n < 0) || (j > 0 && n <= 0))) says_zero = true;
          const mtw::HomVerdict v = mtw::hom_verdict(i, m, j, n);
          const bool consistent =
              !(says_zero && says_z) &&
              (says_z ? v == mtw::HomVerdict::known_z
                      : says_zero ? v == mtw::HomVerdict::known_zero
                                  : v == mtw::HomVerdict::unknown);
          out.require(consistent, "hom oracle scan fails at (" + std::to_string(i) + "," +
                                      std::to_string(m) + "," + std::to_string(j) + "," +
                                      std::to_string(n) + ")");
        }
  return out;
}

// --- criterion 7: stability checker -------------------------------------

Outcome stability_checker() {
  Outcome out;
  const auto slope = mtw::SlopeFunction::default_slope();
  auto Zs = [](int q, int n) {
    return SplitTateMotive::summand(FgAbelianGroup::free_of_rank(1), q, n);
  };
  auto Zmod = [](std::int64_t k, int q, int n) {
    return SplitTateMotive::summand(FgAbelianGroup::cyclic(k), q, n);
  };

  const std::vector<SplitTateMotive> constant(6, direct_sum(Zs(0, 0), Zs(1, 1)));
  for (bool v : mtw::stability_verdicts(constant, slope))
    out.require(v, "constant sequence reported unstable");

  std::vector<SplitTateMotive> junk;
  for (int d = 0; d <= 6; ++d) junk.push_back(direct_sum(Zs(0, 0), Zmod(2, 2, slope(d))));
  for (bool v : mtw::stability_verdicts(junk, slope))
    out.require(v, "junk at the cutoff degree reported unstable");

  std::vector<SplitTateMotive> parity;
  for (int d = 0; d <= 6; ++d)
    parity.push_back(d % 2 == 0 ? direct_sum(Zs(0, 0), Zs(1, 1)) : Zs(0, 0));
  const auto verdicts = mtw::stability_verdicts(parity, slope);
  out.require(verdicts.size() == 6, "parity sequence verdict count");
  out.require(verdicts[0] && verdicts[1], "parity sequence must pass below d=2");
  for (std::size_t d = 2; d < verdicts.size(); ++d)
    out.require(!verdicts[d], "parity sequence must fail at d=" + std::to_string(d));

  std::vector<int> l_vals, m_vals;
  for (int d = 0; d <= 8; ++d) {
    l_vals.push_back(d);
    m_vals.push_back(d / 2 + 2);
  }
  const auto combined = mtw::transfer_slope(std::vector<bool>(9, true),
                                            mtw::SlopeFunction::from_table(l_vals),
                                            mtw::SlopeFunction::from_table(m_vals));
  for (int d = 0; d <= 8; ++d)
    out.require(combined(d) == slope(d), "transferred slope differs from the pointwise minimum");
  return out;
}

// --- criterion 8: determinism and persistence ---------------------------

void strip_volatile(nlohmann::json& j) {
  if (j.is_object()) {
    j.erase("produced_at");
    j.erase("wall_ms");
    for (auto& [k, v] : j.items()) strip_volatile(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_volatile(v);
  }
}

Outcome determinism_and_persistence() {
  Outcome out;
  std::string cli;
  if (const char* env = std::getenv("MTW_CLI"); env && *env)
    cli = env;
  else if (std::filesystem::exists("tools/mtw"))
    cli = "tools/mtw";
  else {
    out.fail("MTW_CLI not set and tools/mtw not found");
    return out;
  }

  const auto cache = std::filesystem::temp_directory_path() /
                     ("mtw_acceptance_" + std::to_string(::getpid()) + ".jsonl");
  std::filesystem::remove(cache);
  const std::string cmd = testutil::quoted(cli) + " count --nu 2 --m 1 --d 4 --p 3 --json --cache " +
                          testutil::quoted(cache.string());

  const auto warm = testutil::run_command(cmd);
  out.require(warm.exit_code == 0, "cold run failed: " + warm.output);
  const auto a = testutil::run_command(cmd, false);
  const auto b = testutil::run_command(cmd, false);
  out.require(a.exit_code == 0 && b.exit_code == 0, "warm runs failed");
  if (out.pass) {
    auto ja = nlohmann::json::parse(a.output);
    auto jb = nlohmann::json::parse(b.output);
    strip_volatile(ja);
    strip_volatile(jb);
    out.require(ja.dump() == jb.dump(), "warm-cache runs differ beyond timestamp fields");
    out.require(ja.at("results").at(0).at("count").get<std::string>() == "54",
                "cached squarefree count should be 81 - 27 = 54");
  }

  // Injected conflicting record must trip the integrity check (exit 3).
  {
    std::ofstream app(cache, std::ios::app);
    app << R"({"family":{"nu":2,"m":1,"d":4},"p":3,"count":"55","method":"brute","produced_at":"2024-01-01T00:00:00Z"})"
        << "\n";
  }
  const auto conflict = testutil::run_command(cmd);
  out.require(conflict.exit_code == 3,
              "conflicting record should exit 3, got " + std::to_string(conflict.exit_code));
  std::filesystem::remove(cache);
  return out;
}

struct Criterion {
  int id;
  std::string label;
  double time_limit_s;  // 0 = no stated limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "squarefree counts p^d - p^(d-1), 2<=d<=5, p in {2,3,5}", 10.0, squarefree_counts},
      {2, "coprime-pair counts p^(2d) - p^(2d-1), 1<=d<=3, p in {2,3,5}", 30.0,
       coprime_pair_counts},
      {3, "class recursion equals brute count on the full grid", 120.0, recursion_vs_brute},
      {4, "scanning equivalence and coordinate form", 0.0, scanning_equivalence},
      {5, "resultant suite (base change, multiplicativity, root product, Bezout sign)", 0.0,
       resultant_suite},
      {6, "split-motive engine suite", 0.0, motive_engine_suite},
      {7, "stability checker and slope transfer", 0.0, stability_checker},
      {8, "determinism and cache persistence through the CLI", 0.0,
       determinism_and_persistence},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && elapsed >= c.time_limit_s)
      out.fail("runtime " + std::to_string(elapsed) + "s exceeds " +
               std::to_string(c.time_limit_s) + "s");

    std::ostringstream line;
    line << (out.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.label << " ("
         << std::fixed << std::setprecision(2) << elapsed << "s)";
    if (!out.pass) line << " -- " << out.detail;
    std::cout << line.str() << "\n";
    if (!out.pass) ++failures;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria FAILED")
            << "\n";
  return failures;
}
