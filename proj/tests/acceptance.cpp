// Acceptance gate: runs each criterion at its stated range and tolerance and
// prints one PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include "cotcoord/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace cotcoord;

namespace {

struct Criterion {
  int id;
  std::string text;
  std::vector<std::string> suites;
  double time_limit_s;  // <= 0: no limit
};

}  // namespace

int main() {
  SuiteConfig config;  // pinned to the criterion ranges
  config.n_max = 30;
  config.r_max = 6;
  config.j_max = 6;
  config.float_tolerance = 1e-8;
  config.float_n_max = 50;
  config.float_r_max = 4;
  config.eq42_n_max = 23;
  config.eq42_r_max = 5;
  config.recon_n_max = 20;
  config.recon_r_max = 4;
  config.gauss_f_max = 40;
  config.bridge_r_max = 20;
  config.prop1_r_max = 12;
  config.stirling_k_max = 10;
  config.bruteforce_r_max = 10;
  config.series_d_r_max = 8;

  const std::vector<Criterion> criteria = {
      {1, "cotangent powers: closed form = definitional, n <= 30, all characters, r <= 6", {"theorem1"}, 300},
      {2, "cotangent numbers: closed form = definitional, n <= 30, all characters, j <= 6", {"eq28"}, 0},
      {3, "c_{r,j} = (-1)^(r+1) 2^(r-j)/(j-1)! d_{r,j}, 1 <= j <= r <= 20", {"theorem2"}, 1},
      {4, "series oracle: expansion r <= 12 and Stirling identity k <= 10", {"prop1"}, 10},
      {5, "primitive-character d-formula = definitional, prime n <= 23 and n = 4, r <= 5", {"eq42"}, 0},
      {6, "reconstruction round trip, n <= 20", {"reconstruction"}, 0},
      {7, "tau(chi) tau(conj chi) = chi(-1) f, primitive chi, f <= 40", {"gauss"}, 0},
      {8, "parity vanishing of coordinates, n <= 30", {"parity"}, 0},
      {9, "float cross-check within 1e-8, n <= 50, r <= 4", {"float"}, 0},
      {10, "d_{r,j}: convolution = enumeration (r <= 10) = series (r <= 8)", {"d_oracle"}, 0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    long cases = 0, failures = 0;
    double seconds = 0;
    std::string first_failure;
    for (const auto& name : c.suites) {
      SuiteResult r = run_suite(name, config);
      cases += r.cases;
      failures += static_cast<long>(r.failures.size());
      seconds += r.wall_seconds;
      if (!r.failures.empty() && first_failure.empty()) first_failure = r.failures.front().key;
    }
    bool in_time = c.time_limit_s <= 0 || seconds < c.time_limit_s;
    bool pass = failures == 0 && cases > 0 && in_time;
    if (!pass) ++failed;
    std::printf("criterion %2d: %s  %s  [%ld cases, %ld failures, %.2f s%s]\n", c.id, pass ? "PASS" : "FAIL",
                c.text.c_str(), cases, failures, seconds, in_time ? "" : ", over time limit");
    if (!first_failure.empty()) std::printf("              first failing case: %s\n", first_failure.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
