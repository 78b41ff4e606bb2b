#include "cotcoord/verify.hpp"
#include "cotcoord/coverage.hpp"

#include <gtest/gtest.h>

using namespace cotcoord;

namespace {

SuiteConfig small() {
  SuiteConfig c;
  c.n_max = 12;
  c.r_max = 4;
  c.j_max = 4;
  c.float_n_max = 14;
  c.float_r_max = 3;
  c.eq42_n_max = 7;
  c.eq42_r_max = 3;
  c.recon_n_max = 8;
  c.recon_r_max = 3;
  c.gauss_f_max = 15;
  c.bridge_r_max = 8;
  c.prop1_r_max = 4;
  c.stirling_k_max = 4;
  c.prop1_values_r_max = 4;
  c.bruteforce_r_max = 6;
  c.series_d_r_max = 5;
  return c;
}

}  // namespace

TEST(Suites, AllPassOnSmallRanges) {
  for (const auto& result : run_suites(small())) {
    EXPECT_TRUE(result.passed()) << to_json(result).dump(2);
    EXPECT_GT(result.cases, 0) << result.name;
  }
}

TEST(Suites, SpecificSuitesSelectable) {
  SuiteConfig c = small();
  c.suites = {"theorem2", "gauss"};
  auto results = run_suites(c);
  ASSERT_EQ(results.size(), 2u);
  EXPECT_EQ(results[0].name, "theorem2");
  EXPECT_EQ(results[1].name, "gauss");
  EXPECT_THROW(run_suite("nope", c), std::invalid_argument);
}

TEST(Suites, DeterministicAcrossThreadCounts) {
  SuiteConfig one = small();
  one.threads = 1;
  SuiteConfig many = small();
  many.threads = 4;
  for (const char* name : {"theorem1", "eq28", "parity"}) {
    auto a = run_suite(name, one), b = run_suite(name, many), c = run_suite(name, many);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
    EXPECT_EQ(to_json(b).dump(), to_json(c).dump());
  }
}

TEST(Suites, CaseCountsFollowConfig) {
  SuiteConfig c = small();
  c.bridge_r_max = 5;
  EXPECT_EQ(suite_theorem2(c).cases, 15);  // pairs 1 <= j <= r <= 5
  c.prop1_r_max = 3;
  c.stirling_k_max = 2;
  EXPECT_EQ(suite_prop1(c).cases, 5);
}

TEST(Suites, UnionTouchesEveryOperation) {
  coverage::reset();
  run_suites(small());
  for (std::size_t i = 0; i < coverage::kOpCount; ++i) {
    auto op = static_cast<coverage::Op>(i);
    EXPECT_TRUE(coverage::touched(op)) << "suites never call " << coverage::name(op);
  }
}

TEST(SuiteConfig, SetByName) {
  SuiteConfig c;
  c.set("n_max", "12");
  c.set("float_tolerance", "1e-6");
  c.set("suites", "theorem1,eq28");
  c.set("threads", "2");
  EXPECT_EQ(c.n_max, 12);
  EXPECT_DOUBLE_EQ(c.float_tolerance, 1e-6);
  EXPECT_EQ(c.suites, (std::vector<std::string>{"theorem1", "eq28"}));
  EXPECT_EQ(c.threads, 2u);
  EXPECT_THROW(c.set("bogus", "1"), std::invalid_argument);
  EXPECT_THROW(c.set("n_max", "x"), std::invalid_argument);
  EXPECT_THROW(c.set("n_max", "0"), std::invalid_argument);
  EXPECT_THROW(c.set("float_tolerance", "-1"), std::invalid_argument);
  EXPECT_THROW(c.set("suites", "theorem1,nope"), std::invalid_argument);
  EXPECT_THROW(c.set("bruteforce_r_max", "40"), std::invalid_argument);
}

TEST(SuiteResult, JsonShape) {
  SuiteConfig c = small();
  auto r = suite_theorem2(c);
  auto j = to_json(r);
  EXPECT_EQ(j["suite"], "theorem2");
  EXPECT_EQ(j["passed"], true);
  EXPECT_TRUE(j["failures"].is_array());
  EXPECT_FALSE(j.contains("wall_seconds"));
  EXPECT_TRUE(to_json(r, true).contains("wall_seconds"));
}

TEST(SuiteResult, FloatSuiteFailsWithImpossibleTolerance) {
  // A tolerance below the rounding floor must produce failure records with repro strings.
  SuiteConfig c = small();
  c.float_n_max = 8;
  c.float_tolerance = 1e-300;
  auto r = suite_float(c);
  ASSERT_FALSE(r.passed());
  for (const auto& f : r.failures) {
    EXPECT_FALSE(f.key.empty());
    if (f.key.find("chi=") != std::string::npos) EXPECT_NE(f.repro.find("--float-check"), std::string::npos);
  }
}
