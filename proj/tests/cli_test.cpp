#include "cotcoord/cli.hpp"
#include "cotcoord/cotangent.hpp"
#include "cotcoord/serialize.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace cotcoord;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  CliRun r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

// Collects every {"order", "coeffs"} object in a document.
void collect_elements(const json& j, std::vector<json>& out) {
  if (j.is_object()) {
    if (j.contains("order") && j.contains("coeffs")) out.push_back(j);
    for (const auto& [k, v] : j.items()) collect_elements(v, out);
  } else if (j.is_array()) {
    for (const auto& v : j) collect_elements(v, out);
  }
}

}  // namespace

TEST(Cli, CoordExample) {
  json j = run_json({"coord", "4", "1", "1", "--method", "def"});
  EXPECT_EQ(cycelem_from_json(j["results"]["value"]).as_rational(), Rat(1));
  EXPECT_EQ(j["command"], "cotcoord coord 4 1 1 --method def --format json");
  EXPECT_EQ(j["inputs"]["n"], 4);
  EXPECT_TRUE(j.contains("version"));
}

TEST(Cli, CoordMethodsAgree) {
  for (const char* m : {"def", "t1", "eq42"}) {
    json j = run_json({"coord", "7", "1", "3", "--method", m});
    json d = run_json({"coord", "7", "1", "3", "--method", "def"});
    EXPECT_EQ(j["results"]["value"], d["results"]["value"]) << m;
  }
  json a = run_json({"coord", "12", "3", "--j", "2", "--method", "c28"});
  json b = run_json({"coord", "12", "3", "--j", "2"});
  EXPECT_EQ(a["results"]["value"], b["results"]["value"]);
}

TEST(Cli, AllCharsAndReconstruct) {
  json j = run_json({"coord", "9", "0", "2", "--all-chars", "--reconstruct"});
  EXPECT_EQ(j["results"]["coordinates"].size(), 6u);
  EXPECT_EQ(j["results"]["round_trip"], true);
  EXPECT_EQ(cycelem_from_json(j["results"]["reconstructed"]), icot_power(2, 9));
  json one = run_json({"coord", "6", "0", "--one", "--method", "one", "--all-chars"});
  EXPECT_EQ(one["results"]["coordinates"][0]["value"]["coeffs"][0], "2");
}

TEST(Cli, FloatCheck) {
  json j = run_json({"coord", "11", "3", "2", "--float-check"});
  EXPECT_LT(j["results"]["float_check"]["difference"].get<double>(), 1e-8);
}

TEST(Cli, CoeffsCsv) {
  CliRun r = run({"coeffs", "c", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3,1,\"1\"\n3,3,\"1/2\"\n");
  CliRun d = run({"coeffs", "d", "4"});
  EXPECT_EQ(d.out, "4,2,\"1/3\"\n4,4,\"1\"\n");
  EXPECT_EQ(run({"coeffs", "d", "4", "--bruteforce"}).out, d.out);
  EXPECT_EQ(run({"coeffs", "d", "4", "--series"}).out, d.out);
  EXPECT_EQ(run({"coeffs", "check", "12"}).code, 0);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "theorem1", "--n-max", "10"}).code, 0);
  std::string path = ::testing::TempDir() + "cotcoord_float.cfg";
  std::ofstream(path) << "float_n_max = 8\n";
  CliRun bad = run({"--config", path, "verify", "float", "--tol", "1e-300"});
  std::remove(path.c_str());
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("repro:"), std::string::npos);
}

TEST(Cli, SeriesVerify) {
  EXPECT_EQ(run({"series", "verify", "--prop1", "--rmax", "4"}).code, 0);
  EXPECT_EQ(run({"series", "verify", "--stirling", "--kmax", "3"}).code, 0);
  EXPECT_EQ(run({"series", "verify"}).code, 2);
}

TEST(Cli, CharsAndBernoulliAndCot) {
  json c = run_json({"chars", "8", "--gauss"});
  EXPECT_EQ(c["results"].size(), 4u);
  EXPECT_EQ(c["results"][0]["conductor"], 1);
  json b = run_json({"bernoulli", "12"});
  EXPECT_EQ(b["results"]["number"], "-691/2730");
  json g = run_json({"bernoulli", "1", "--char", "4", "1"});
  EXPECT_EQ(g["results"]["value"]["coeffs"][0], "-1/2");
  json t = run_json({"cot", "4", "--j", "3"});
  EXPECT_EQ(t["results"]["value"]["coeffs"], json::array({"0", "-4"}));
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  std::vector<std::vector<std::string>> cmds = {
      {"coord", "15", "5", "3", "--format", "json"},
      {"chars", "24", "--format", "json"},
      {"verify", "theorem2", "gauss", "--format", "json"},
  };
  for (const auto& cmd : cmds) EXPECT_EQ(run(cmd).out, run(cmd).out);
}

TEST(Cli, EmittedElementsRoundTrip) {
  for (auto args : std::vector<std::vector<std::string>>{{"coord", "10", "0", "2", "--all-chars", "--reconstruct"},
                                                         {"chars", "13", "--gauss"},
                                                         {"cot", "9", "--power", "4"}}) {
    json j = run_json(args);
    std::vector<json> elems;
    collect_elements(j, elems);
    ASSERT_FALSE(elems.empty());
    for (const auto& e : elems) EXPECT_EQ(to_json(cycelem_from_json(e)), e);
  }
}

TEST(Cli, UsageErrorsAreNonzeroWithoutCrashing) {
  std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate"},
      {"coord", "1", "0", "1"},
      {"coord", "4", "abc", "1"},
      {"coord", "4", "2", "1"},
      {"coord", "4", "-1", "1"},
      {"coord", "4", "1", "0"},
      {"coord", "4", "1"},
      {"coord", "4", "1", "1", "--j", "2"},
      {"coord", "4", "1", "1", "--method", "c28"},
      {"coord", "12", "1", "1", "--method", "eq42"},
      {"coord", "4", "1", "1", "--reconstruct"},
      {"chars", "1"},
      {"coeffs", "x", "3"},
      {"coeffs", "c", "0"},
      {"coeffs", "c", "3", "--bruteforce"},
      {"cot", "5"},
      {"cot", "5", "--j", "1", "--power", "2"},
      {"bernoulli", "2", "--char", "12", "1"},
      {"bernoulli", "2", "--char", "5"},
      {"verify", "nosuch"},
      {"verify", "--n-max", "0"},
      {"coord", "4", "1", "1", "--format", "yaml"},
  };
  for (const auto& args : bad) {
    CliRun r = run(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    EXPECT_NE(r.code, 0) << joined;
    EXPECT_NE(r.code, 3) << joined << r.err;
    EXPECT_FALSE(r.err.empty()) << joined;
  }
}

TEST(Cli, HelpAndVersion) {
  EXPECT_EQ(run({"--help"}).code, 0);
  CliRun v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find(std::string(version())), std::string::npos);
}

TEST(Cli, ConfigFile) {
  std::string path = ::testing::TempDir() + "cotcoord_test.cfg";
  {
    std::ofstream f(path);
    f << "# ranges\nn_max = 5\n\nsuites = theorem1\nformat = json\n";
  }
  CliRun r = run({"--config", path, "verify"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["inputs"]["n_max"], 5);
  ASSERT_EQ(j["results"].size(), 1u);
  EXPECT_EQ(j["results"][0]["suite"], "theorem1");

  // Flags override the file.
  CliRun o = run({"--config", path, "verify", "--n-max", "4", "--format", "text"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out.rfind("PASS theorem1", 0), 0u);

  {
    std::ofstream f(path);
    f << "n_max 5\n";
  }
  CliRun bad = run({"--config", path, "verify"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 1"), std::string::npos);
  EXPECT_EQ(run({"--config", path + ".missing", "chars", "4"}).code, 2);
  std::remove(path.c_str());
}

TEST(Cli, ConfigFromEnvironment) {
  std::string path = ::testing::TempDir() + "cotcoord_env.cfg";
  {
    std::ofstream f(path);
    f << "format = json\n";
  }
  setenv(kConfigEnvVar, path.c_str(), 1);
  CliRun r = run({"chars", "3"});
  unsetenv(kConfigEnvVar);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::accept(r.out));
  std::remove(path.c_str());
}

TEST(Cli, ApplyConfigErrors) {
  CliDefaults d;
  std::istringstream ok("  threads = 3 \n# x\n");
  apply_config(ok, d);
  EXPECT_EQ(d.suite.threads, 3u);
  std::istringstream bad("format = xml\n");
  EXPECT_THROW(apply_config(bad, d), std::invalid_argument);
}
