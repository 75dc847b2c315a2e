#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mtw/cache.hpp"
#include "mtw/enumerate.hpp"
#include "mtw/motive_json.hpp"
#include "mtw/stability.hpp"
#include "mtw/tate_class.hpp"
#include "mtw/verify.hpp"

namespace {

using nlohmann::ordered_json;

using Clock = std::chrono::steady_clock;

struct ReportTimer {
  Clock::time_point start = Clock::now();

  std::int64_t wall_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  }
};

void finish_report(ordered_json& report, const ReportTimer& timer) {
  report["wall_ms"] = timer.wall_ms();
  report["produced_at"] = mtw::utc_timestamp_now();
}

void emit_json(const ordered_json& report) { std::cout << report.dump(2) << "\n"; }

std::filesystem::path resolve_cache_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("WORKBENCH_CACHE"); env && *env) return env;
  return "workbench_cache.jsonl";
}

ordered_json family_json(const mtw::FamilySpec& spec) {
  ordered_json j;
  j["nu"] = spec.nu;
  j["m"] = spec.m;
  j["d"] = spec.d;
  return j;
}

std::vector<std::uint32_t> merge_primes(const std::vector<std::uint32_t>& p_flags,
                                        const std::vector<std::uint32_t>& primes_flag) {
  std::vector<std::uint32_t> out;
  auto push = [&](std::uint32_t p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  for (auto p : p_flags) push(p);
  for (auto p : primes_flag) push(p);
  return out;
}

ordered_json class_terms_json(const mtw::TateClass& c) {
  ordered_json terms = ordered_json::array();
  for (const auto& [exp, coeff] : c.terms()) {
    ordered_json t;
    t["exp"] = exp;
    t["coeff"] = coeff.str();
    terms.push_back(std::move(t));
  }
  return terms;
}

int run_count(const mtw::FamilySpec& spec, const std::vector<std::uint32_t>& primes, int parts,
              const std::string& cache_flag, bool as_json, bool as_csv) {
  spec.validate();
  if (primes.empty()) throw std::invalid_argument("count: at least one prime required (--p/--primes)");
  const auto cache_path = resolve_cache_path(cache_flag);

  ReportTimer timer;
  ordered_json report;
  report["command"] = "count";
  report["params"]["nu"] = spec.nu;
  report["params"]["m"] = spec.m;
  report["params"]["d"] = spec.d;
  report["params"]["primes"] = primes;
  report["params"]["parts"] = parts;
  report["params"]["cache"] = cache_path.string();
  report["results"] = ordered_json::array();

  std::vector<std::string> human;
  std::vector<std::string> csv;
  csv.push_back("nu,m,d,p,count,method");

  for (std::uint32_t p : primes) {
    mtw::CountRecord record;
    bool from_cache = false;
    if (auto cached = mtw::cache_lookup(spec, p, cache_path)) {
      record = *cached;
      from_cache = true;
    } else {
      record = parts == 1 ? mtw::count_points(spec, p) : mtw::count_partitioned(spec, p, parts);
      mtw::cache_store(record, cache_path);
    }

    ordered_json r;
    r["family"] = family_json(spec);
    r["p"] = p;
    r["count"] = std::to_string(record.count);
    r["method"] = mtw::to_string(record.method);
    r["from_cache"] = from_cache;
    r["produced_at"] = record.produced_at;
    report["results"].push_back(std::move(r));

    human.push_back(mtw::to_string(spec) + " over F_" + std::to_string(p) + ": count " +
                    std::to_string(record.count) + " (" + mtw::to_string(record.method) +
                    (from_cache ? ", cached)" : ")"));
    csv.push_back(std::to_string(spec.nu) + "," + std::to_string(spec.m) + "," +
                  std::to_string(spec.d) + "," + std::to_string(p) + "," +
                  std::to_string(record.count) + "," + mtw::to_string(record.method));
  }
  report["summary"]["cases"] = primes.size();
  finish_report(report, timer);

  if (as_json)
    emit_json(report);
  else if (as_csv)
    for (const auto& line : csv) std::cout << line << "\n";
  else
    for (const auto& line : human) std::cout << line << "\n";
  return 0;
}

int run_class(const mtw::FamilySpec& spec, std::optional<long long> at, bool as_json) {
  spec.validate();
  ReportTimer timer;
  const mtw::TateClass cls = mtw::family_class(spec);

  ordered_json report;
  report["command"] = "class";
  report["params"]["nu"] = spec.nu;
  report["params"]["m"] = spec.m;
  report["params"]["d"] = spec.d;
  if (at) report["params"]["at"] = std::to_string(*at);

  ordered_json result;
  result["family"] = family_json(spec);
  result["class"] = mtw::to_string(cls);
  result["terms"] = class_terms_json(cls);
  if (at) {
    result["at"] = std::to_string(*at);
    result["value"] = mtw::specialize(cls, mtw::Int(*at)).str();
  }
  report["results"] = ordered_json::array({result});
  report["summary"]["cases"] = 1;
  finish_report(report, timer);

  if (as_json) {
    emit_json(report);
  } else {
    std::cout << mtw::to_string(spec) << " class = " << mtw::to_string(cls) << "\n";
    if (at)
      std::cout << "value at L=" << *at << ": " << mtw::specialize(cls, mtw::Int(*at)).str()
                << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, int max_d, const std::vector<std::uint32_t>& primes,
               int trials, bool as_json) {
  ReportTimer timer;
  std::vector<mtw::CheckResult> checks;
  if (suite == "scan") {
    checks = mtw::verify_scan(max_d, primes.empty() ? std::vector<std::uint32_t>{2, 3, 5} : primes,
                              trials);
  } else if (suite == "recursion") {
    checks = mtw::verify_recursion(max_d, primes.empty() ? std::vector<std::uint32_t>{2, 3} : primes);
  } else if (suite == "resultant") {
    checks = mtw::verify_resultant(trials);
  } else {
    throw std::invalid_argument("verify: unknown suite '" + suite +
                                "' (expected scan, recursion or resultant)");
  }

  ordered_json report;
  report["command"] = "verify";
  report["params"]["suite"] = suite;
  report["params"]["max_d"] = max_d;
  report["params"]["primes"] = primes;
  report["params"]["trials"] = trials;
  report["results"] = ordered_json::array();

  bool all_passed = true;
  for (const auto& c : checks) {
    all_passed = all_passed && c.passed();
    ordered_json r;
    r["check"] = c.name;
    r["cases"] = c.cases;
    r["failures"] = c.failures;
    if (!c.counterexample.empty()) r["counterexample"] = c.counterexample;
    report["results"].push_back(std::move(r));
  }
  report["summary"]["pass"] = all_passed;
  finish_report(report, timer);

  if (as_json) {
    emit_json(report);
  } else {
    for (const auto& c : checks) {
      if (c.passed())
        std::cout << "[ok]   " << c.name << ": " << c.cases << " cases\n";
      else
        std::cout << "[FAIL] " << c.name << ": " << c.failures << "/" << c.cases
                  << " failures; first: " << c.counterexample << "\n";
    }
    std::cout << (all_passed ? "verify: pass" : "verify: FAIL") << "\n";
  }
  return all_passed ? 0 : 1;
}

mtw::SlopeFunction parse_slope(const std::string& slope_arg) {
  if (slope_arg == "default") return mtw::SlopeFunction::default_slope();
  const std::string prefix = "table:";
  if (slope_arg.rfind(prefix, 0) == 0) {
    const std::string path = slope_arg.substr(prefix.size());
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("stability: cannot open slope table " + path);
    return mtw::slope_table_from_json(nlohmann::json::parse(in));
  }
  throw std::invalid_argument("stability: --slope expects 'default' or 'table:<path>'");
}

int run_stability(const std::string& input_path, const std::string& slope_arg, bool as_json) {
  ReportTimer timer;
  std::ifstream in(input_path);
  if (!in) throw std::invalid_argument("stability: cannot open " + input_path);
  const auto sequence = mtw::sequence_from_json(nlohmann::json::parse(in));
  const auto slope = parse_slope(slope_arg);
  const auto verdicts = mtw::stability_verdicts(sequence, slope);

  ordered_json report;
  report["command"] = "stability";
  report["params"]["input"] = input_path;
  report["params"]["slope"] = slope_arg;
  report["results"] = ordered_json::array();

  bool stable = true;
  std::vector<int> failing;
  for (std::size_t d = 0; d < verdicts.size(); ++d) {
    ordered_json r;
    r["d"] = d;
    r["cutoff"] = slope(static_cast<int>(d));
    r["stable"] = static_cast<bool>(verdicts[d]);
    report["results"].push_back(std::move(r));
    if (!verdicts[d]) {
      stable = false;
      failing.push_back(static_cast<int>(d));
    }
  }
  report["summary"]["stable"] = stable;
  report["summary"]["failures"] = failing;
  finish_report(report, timer);

  if (as_json) {
    emit_json(report);
  } else {
    std::cout << "d  cutoff  stable\n";
    for (std::size_t d = 0; d < verdicts.size(); ++d)
      std::cout << d << "  " << slope(static_cast<int>(d)) << "       "
                << (verdicts[d] ? "yes" : "NO") << "\n";
    if (stable)
      std::cout << "sequence: stable\n";
    else
      std::cout << "sequence: UNSTABLE (first failure at d=" << failing.front() << ")\n";
  }
  return stable ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mtw: exact workbench for configuration schemes, Lefschetz classes and split Tate motives"};
  app.require_subcommand(1);

  mtw::FamilySpec spec;
  std::vector<std::uint32_t> p_flags, primes_flag;
  int parts = 1;
  std::string cache_flag;
  bool as_json = false, as_csv = false;

  auto* count = app.add_subcommand("count", "exhaustive point count of a family over F_p");
  count->add_option("--nu", spec.nu, "multiplicity bound")->required();
  count->add_option("--m", spec.m, "tuple length")->required();
  count->add_option("--d", spec.d, "common degree")->required();
  count->add_option("--p", p_flags, "prime (repeatable)");
  count->add_option("--primes", primes_flag, "comma-separated primes")->delimiter(',');
  count->add_option("--parts", parts, "number of lexicographic blocks");
  count->add_option("--cache", cache_flag, "cache file (JSON lines)");
  count->add_flag("--json", as_json, "machine-readable report");
  count->add_flag("--csv", as_csv, "CSV rows for count grids");

  mtw::FamilySpec class_spec;
  std::optional<long long> at;
  bool class_json = false;
  auto* cls = app.add_subcommand("class", "Grothendieck-ring class of a family in L");
  cls->add_option("--nu", class_spec.nu, "multiplicity bound")->required();
  cls->add_option("--m", class_spec.m, "tuple length")->required();
  cls->add_option("--d", class_spec.d, "common degree")->required();
  cls->add_option("--at", at, "specialize at L = q");
  cls->add_flag("--json", class_json, "machine-readable report");

  std::string suite;
  int max_d = 4;
  std::vector<std::uint32_t> verify_primes;
  int trials = 0;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run an exhaustive/randomized property suite");
  verify->add_option("suite", suite, "scan | recursion | resultant")->required();
  verify->add_option("--max-d", max_d, "degree bound for exhaustive grids");
  verify->add_option("--primes", verify_primes, "comma-separated primes")->delimiter(',');
  verify->add_option("--trials", trials, "randomized trial count");
  verify->add_flag("--json", verify_json, "machine-readable report");

  std::string seq_path, slope_arg = "default";
  bool stab_json = false;
  auto* stability = app.add_subcommand("stability", "check a JSON sequence of split motives");
  stability->add_option("sequence", seq_path, "path to JSON sequence file")->required();
  stability->add_option("--slope", slope_arg, "default | table:<path>");
  stability->add_flag("--json", stab_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed())
      return run_count(spec, merge_primes(p_flags, primes_flag), parts, cache_flag, as_json,
                       as_csv);
    if (cls->parsed()) return run_class(class_spec, at, class_json);
    if (verify->parsed()) {
      if (trials == 0) trials = suite == "scan" ? 200 : 1000;
      return run_verify(suite, max_d, verify_primes, trials, verify_json);
    }
    if (stability->parsed()) return run_stability(seq_path, slope_arg, stab_json);
  } catch (const mtw::cache_integrity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const mtw::guard_rail_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
