#pragma once

/**
 * Verification suites. Each suite compares two independently computed sides
 * of an identity over a range of inputs and records every disagreement; none
 * stops at the first failure.
 *
 * Cases are enumerated in a fixed order and may run on several threads; the
 * result is collected by case position, so a rerun with the same config
 * yields the same SuiteResult apart from wall_seconds.
 */

#include <json.hpp>

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cotcoord {

struct SuiteConfig {
  long n_max = 30;  // theorem1, eq28, parity, prop1_values
  long r_max = 6;   // theorem1
  long j_max = 6;   // eq28
  double float_tolerance = 1e-8;

  long float_n_max = 50;
  long float_r_max = 4;
  long eq42_n_max = 23;  // primes up to this, plus n = 4
  long eq42_r_max = 5;
  long recon_n_max = 20;
  long recon_r_max = 4;  // also the largest j for cotangent numbers
  long gauss_f_max = 40;
  long bridge_r_max = 20;
  long prop1_r_max = 12;
  long stirling_k_max = 10;
  long prop1_values_r_max = 8;
  long bruteforce_r_max = 10;
  long series_d_r_max = 8;

  unsigned threads = 0;  // 0: hardware concurrency

  std::vector<std::string> suites;  // empty: all

  /// Sets one field by its name above ("n_max", "float_tolerance", "suites",
  /// ...). "suites" takes a comma-separated list. Throws std::invalid_argument
  /// for an unknown key or a malformed value.
  void set(std::string_view key, std::string_view value);
};

struct CaseFailure {
  std::string key;        // stable, human-readable case identifier
  nlohmann::json inputs;  // everything needed to rebuild both sides
  nlohmann::json expected;
  nlohmann::json actual;
  std::string repro;      // CLI invocation(s) printing both sides
};

struct SuiteResult {
  std::string name;
  long cases = 0;
  std::vector<CaseFailure> failures;
  double wall_seconds = 0;

  bool passed() const { return failures.empty(); }
};

SuiteResult suite_theorem1(const SuiteConfig& config);
SuiteResult suite_eq28(const SuiteConfig& config);
SuiteResult suite_theorem2(const SuiteConfig& config);
SuiteResult suite_eq42(const SuiteConfig& config);
SuiteResult suite_float(const SuiteConfig& config);
SuiteResult suite_reconstruction(const SuiteConfig& config);
SuiteResult suite_gauss(const SuiteConfig& config);
SuiteResult suite_parity(const SuiteConfig& config);
SuiteResult suite_prop1(const SuiteConfig& config);
SuiteResult suite_prop1_values(const SuiteConfig& config);
SuiteResult suite_d_oracle(const SuiteConfig& config);

/// Names accepted by run_suite, in run order.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view name, const SuiteConfig& config);

/// Runs config.suites (all when empty) in suite_names() order.
std::vector<SuiteResult> run_suites(const SuiteConfig& config);

/// {"suite", "cases", "passed", "failures": [...]} plus "wall_seconds" when
/// include_timing is set.
nlohmann::json to_json(const SuiteResult& result, bool include_timing = false);

}  // namespace cotcoord
