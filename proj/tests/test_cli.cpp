#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lenard");
  std::ostringstream out, err;
  const int code = lenard::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const json& condition(const json& doc, const std::string& name) {
  for (const auto& c : doc["conditions"])
    if (c["name"] == name) return c;
  throw std::runtime_error("missing condition " + name);
}

class EnvGuard {
 public:
  EnvGuard(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~EnvGuard() { unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST(Cli, BuildComplexFirstRoot) {
  const auto r = run({"build-complex", "--alpha", "2", "--beta", "1", "--root", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["version"], 1);
  EXPECT_EQ(doc["params"]["sigma2"], -0.125);
  EXPECT_NEAR(doc["params"]["sigma1"].get<double>(), 0.0, 1e-15);
  EXPECT_NEAR(doc["params"]["sigma0"].get<double>(), 0.25, 1e-15);
  EXPECT_TRUE(doc["pass"].get<bool>());
  EXPECT_EQ(doc["points"].size(), 50u);
  EXPECT_TRUE(condition(doc, "wdvv_of_complex")["pass"].get<bool>());
}

TEST(Cli, DegenerateParameters) {
  const auto r = run({"build-complex", "--alpha", "1", "--beta", "1", "--root", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("(α−β)²(2β+α)≠0"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, RootSelectionRequired) {
  EXPECT_EQ(run({"build-complex", "--alpha", "2", "--beta", "1"}).code, 2);
  EXPECT_EQ(run({"build-complex", "--alpha", "2", "--beta", "1", "--root", "3"}).code, 2);
  EXPECT_EQ(run({"build-complex", "--alpha", "2", "--beta", "1", "--root", "1", "--sigma2", "0"}).code, 2);
  EXPECT_EQ(run({"build-complex", "--alpha", "2", "--beta", "0", "--root", "1"}).code, 2);
}

TEST(Cli, ExplicitOffRootSigma) {
  const auto r = run({"build-complex", "--alpha", "2", "--beta", "1", "--sigma2", "0.0"});
  EXPECT_EQ(r.code, 1);
  const auto doc = json::parse(r.out);
  EXPECT_NEAR(doc["params"]["phi"].get<double>(), 5.0 / 8, 1e-15);
  EXPECT_FALSE(condition(doc, "symmetry_constraint")["pass"].get<bool>());
  EXPECT_FALSE(condition(doc, "phi_vanishes")["pass"].get<bool>());
}

TEST(Cli, VerifyWdvv) {
  const auto r = run({"verify-wdvv", "--potential", "veselov", "--n", "3", "--m", "2", "--points", "100", "--seed", "42"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(run({"verify-wdvv", "--m", "0"}).code, 2);
  EXPECT_EQ(run({"verify-wdvv", "--points", "0"}).code, 2);
  EXPECT_EQ(run({"verify-wdvv", "--potential", "other"}).code, 2);
}

TEST(Cli, VerifyWdvvQuarterX) {
  const auto r = run({"verify-wdvv", "--euler", "quarter-x"});
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_NEAR(doc["extras"]["g_matrix"][0][0].get<double>(), 2.5, 1e-10);
  EXPECT_NEAR(doc["extras"]["g_matrix"][0][1].get<double>(), -1.0, 1e-10);
  EXPECT_TRUE(condition(doc, "generalized_wdvv")["pass"].get<bool>());
}

TEST(Cli, ExperimentalHigherDimension) {
  const auto doc = json::parse(run({"verify-wdvv", "--n", "4", "--m", "3"}).out);
  EXPECT_TRUE(doc["extras"]["experimental"].get<bool>());
}

TEST(Cli, ReproduceExample3) {
  const auto r = run({"reproduce", "example3"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(condition(doc, "potential_reconstruction")["points"], 10);
  EXPECT_GT(doc["extras"]["dV_literal_max_discrepancy"].get<double>(), 1e-3);
}

TEST(Cli, ReproduceGd) {
  const auto r = run({"reproduce", "gd"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto doc = json::parse(r.out);
  EXPECT_GT(doc["extras"]["nijenhuis_contraction_norm_w1_at_123"].get<double>(), 0.1);
  EXPECT_EQ(run({"reproduce", "kdv"}).code, 2);
}

TEST(Cli, SolveConstraints) {
  const auto r = run({"solve-constraints", "--alpha", "5", "--beta", "2"});
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_NEAR(doc["extras"]["root1"]["sigma2"].get<double>(), -1.0 / 27, 1e-15);
  EXPECT_NEAR(doc["extras"]["root2"]["sigma2"].get<double>(), -11.0 / 216, 1e-15);
}

TEST(Cli, DeterministicBytes) {
  const auto a = run({"reproduce", "example3", "--format", "json"});
  const auto b = run({"reproduce", "example3", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto c = run({"reproduce", "example3", "--format", "json"});
  omp_set_num_threads(threads);
  EXPECT_EQ(a.out, c.out);
#endif
  EXPECT_NE(a.out, run({"reproduce", "example3", "--seed", "7"}).out);
}

TEST(Cli, TextFormat) {
  const auto r = run({"build-complex", "--alpha", "5", "--beta", "2", "--root", "2", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("overall: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("PASS  IV.operators_commute"), std::string::npos);
}

TEST(Cli, ToleranceOverrides) {
  {
    EnvGuard env("LENARD_TOL_ANALYTIC", "1e-30");
    EXPECT_EQ(run({"build-complex", "--alpha", "2", "--beta", "1", "--root", "1"}).code, 1);
    // flag beats env
    EXPECT_EQ(run({"build-complex", "--alpha", "2", "--beta", "1", "--root", "1", "--tol-analytic", "1e-9"}).code, 0);
  }
  EXPECT_EQ(run({"build-complex", "--alpha", "2", "--beta", "1", "--root", "1", "--tol-fd", "1e-12"}).code, 1);
  EXPECT_EQ(run({"build-complex", "--alpha", "2", "--beta", "1", "--root", "1", "--tol-fd", "-1"}).code, 2);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "lenard_cli_out.json";
  const auto r = run({"solve-constraints", "--alpha", "2", "--beta", "1", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_TRUE(json::parse(in)["pass"].get<bool>());
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = LENARD_CLI_PATH;
  EXPECT_EQ(std::system((bin + " solve-constraints --alpha 2 --beta 1 > /dev/null").c_str()), 0);
  EXPECT_NE(std::system((bin + " verify-wdvv --m 0 > /dev/null 2>&1").c_str()), 0);
}
