#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "lab/cli.hpp"

using namespace ellsl2::lab;
using nlohmann::json;

namespace {

RunResult invoke(std::vector<std::string> args, const char* env = nullptr) {
  args.insert(args.begin(), "ellsl2");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  const auto parsed = parse_command_line(static_cast<int>(argv.size()), argv.data(), env);
  if (const auto* r = std::get_if<RunResult>(&parsed)) return *r;
  return run(std::get<RunConfig>(parsed));
}

}  // namespace

TEST(Cli, VerifyAllPasses) {
  const auto r = invoke({"verify-all", "--j", "1", "--h", "0.5", "--k", "0.5", "--tol", "1e-10"});
  EXPECT_EQ(r.exit_code, kExitPass);
  const auto doc = json::parse(r.output);
  EXPECT_TRUE(doc["pass"].get<bool>());
  EXPECT_TRUE(doc["failed"].empty());
  for (const char* key : {"deform.eq12", "deform.eq29", "hopf.delta1.eq48", "hopf.delta2.eq49",
                          "auto.ell-iKp.eq13", "auto.uh-half.eq59"}) {
    EXPECT_TRUE(doc["residuals"].contains(key)) << key;
  }
}

TEST(Cli, VerifyAllOutsideNumericRangeSkips) {
  const auto r = invoke({"verify-all", "--j", "3/2", "--h", "0.5", "--k", "1"});
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_FALSE(json::parse(r.output)["skipped"].empty());
}

TEST(Cli, RepBuild) {
  const auto r = invoke({"rep", "build", "--j", "0.5"});
  ASSERT_EQ(r.exit_code, kExitPass);
  const auto doc = json::parse(r.output);
  EXPECT_EQ(doc["dim"], 2);
  EXPECT_EQ(doc["Jp"]["entries"][1][0].get<double>(), 1.0);
  EXPECT_EQ(doc["J0"]["entries"][0][0].get<double>(), 0.5);
}

TEST(Cli, RewriteNormalForm) {
  const auto r = invoke({"rewrite", "nf", "--expr", "[Jp,Jm]"});
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(r.output, "[{\"a\":0,\"b\":1,\"c\":0,\"coeff\":\"2\"}]\n");
}

TEST(Cli, RewriteCsv) {
  const auto r = invoke({"rewrite", "nf", "--expr", "1/2*Jp*Jm", "--format", "csv"});
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(r.output, "a,b,c,coeff\n0,1,0,1\n1,0,1,1/2\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"frobnicate"}).exit_code, kExitUsage);
  EXPECT_EQ(invoke({"deform", "verify", "--bogus"}).exit_code, kExitUsage);
  EXPECT_EQ(invoke({"deform"}).exit_code, kExitUsage);
  EXPECT_EQ(invoke({"deform", "verify", "--tol", "0"}).exit_code, kExitUsage);
  EXPECT_EQ(invoke({"rep", "build", "--format", "xml"}).exit_code, kExitUsage);
  EXPECT_EQ(invoke({"sweep", "--js", "", "--hs", "0.5", "--ks", "0.5"}).exit_code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).exit_code, kExitPass);
}

TEST(Cli, DomainErrors) {
  const auto r = invoke({"elliptic", "K", "--k", "1"});
  EXPECT_EQ(r.exit_code, kExitDomain);
  const auto doc = json::parse(r.output);
  EXPECT_EQ(doc["error"]["type"], "domain_error");
  EXPECT_EQ(invoke({"rep", "build", "--j", "1/3"}).exit_code, kExitDomain);
  EXPECT_EQ(invoke({"rewrite", "nf", "--expr", "Jp^"}).exit_code, kExitDomain);
  EXPECT_EQ(invoke({"auto", "shift", "--which", "ell-iKp", "--k", "1"}).exit_code, kExitDomain);
  const auto pole = invoke({"elliptic", "eval", "--u", "0,2.1565156474996434", "--k", "0.5"});
  EXPECT_EQ(pole.exit_code, kExitDomain);
  EXPECT_EQ(json::parse(pole.output)["error"]["type"], "pole");
}

TEST(Cli, ResidualFailureExitsOne) {
  const auto r = invoke({"deform", "verify", "--j", "2", "--order", "2"});
  EXPECT_EQ(r.exit_code, kExitResidual);
  EXPECT_FALSE(json::parse(r.output)["pass"].get<bool>());
}

TEST(Cli, EllipticCommands) {
  const auto k = json::parse(invoke({"elliptic", "K", "--k", "0.7071067811865476"}).output);
  EXPECT_NEAR(k["K"].get<double>(), 1.8540746773013719, 1e-12);
  const auto e = invoke({"elliptic", "eval", "--u", "0.3,0", "--k", "0.5"});
  EXPECT_EQ(e.exit_code, kExitPass);
  EXPECT_EQ(json::parse(e.output)["sn"].size(), 2u);
  EXPECT_EQ(invoke({"elliptic", "periods", "--k", "0.5"}).exit_code, kExitPass);
}

TEST(Cli, HopfAndAuto) {
  for (const char* w : {"1", "uh", "2"}) {
    EXPECT_EQ(invoke({"hopf", "verify", "--which", w, "--j1", "1/2", "--j2", "1"}).exit_code, kExitPass) << w;
    EXPECT_EQ(invoke({"hopf", "delta", "--which", w}).exit_code, kExitPass) << w;
  }
  for (const char* w : {"sign", "uh-half", "ell-iKp", "ell-2KiKp"}) {
    const auto r = invoke({"auto", "shift", "--which", w, "--j", "3/2", "--h", "0.8", "--k", "0.5"});
    EXPECT_EQ(r.exit_code, kExitPass) << w;
    EXPECT_EQ(json::parse(r.output)["symbolic_check"]["status"], "verified") << w;
  }
  EXPECT_EQ(invoke({"auto", "shift", "--which", "sideways"}).exit_code, kExitDomain);
}

TEST(Cli, DeformBuildAndVerify) {
  const auto b = json::parse(invoke({"deform", "build", "--j", "1", "--jordanian"}).output);
  EXPECT_EQ(b["provenance"], "jordanian");
  EXPECT_EQ(invoke({"deform", "verify", "--j", "5/2", "--h", "0.9", "--k", "0.3"}).exit_code, kExitPass);
  EXPECT_EQ(invoke({"deform", "verify", "--j", "2", "--jordanian"}).exit_code, kExitPass);
}

TEST(Cli, Determinism) {
  const std::vector<std::string> args = {"verify-all", "--j", "3/2", "--h", "0.7", "--k", "0.4", "--seed", "9"};
  EXPECT_EQ(invoke(args).output, invoke(args).output);
  const std::vector<std::string> sw = {"sweep", "--js", "1/2,1,3/2", "--hs", "0.5", "--ks", "0,0.5,1", "--threads", "4"};
  const auto a = invoke(sw);
  const auto b = invoke({"sweep", "--js", "1/2,1,3/2", "--hs", "0.5", "--ks", "0,0.5,1", "--threads", "1"});
  EXPECT_EQ(a.output, b.output);
}

TEST(Cli, SweepTable) {
  const auto r = invoke({"sweep", "--js", "1/2,1,3/2", "--hs", "0.5", "--ks", "0,0.5,1"});
  EXPECT_EQ(r.exit_code, kExitPass);
  std::vector<std::string> lines;
  std::stringstream ss(r.output);
  for (std::string line; std::getline(ss, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 10u);
  EXPECT_EQ(lines[0], "j,h,k,eq12,eq13,eq14,jacobi,casimir,inversion,two_path,error");
  EXPECT_EQ(lines[1].substr(0, 10), "1/2,0.5,0,");

  const auto s = invoke({"sweep", "--js", "1", "--hs", "0.5", "--ks", "0.5,1", "--scalar"});
  EXPECT_EQ(s.exit_code, kExitDomain);
  EXPECT_NE(s.output.find("\"periods"), std::string::npos);

  const auto j = json::parse(invoke({"sweep", "--js", "1", "--hs", "0.5", "--ks", "0.5", "--format", "json"}).output);
  EXPECT_EQ(j["rows"].size(), 1u);
}

TEST(Cli, ConfigFileAndEnvironment) {
  const std::string path = ::testing::TempDir() + "ellsl2_cli_test.cfg";
  {
    std::ofstream f(path);
    f << "# settings\nk = 0.3\nformat = csv\n";
  }
  const auto from_file = invoke({"elliptic", "K", "--config", path});
  EXPECT_EQ(from_file.output.substr(0, 10), "key,value\n");
  EXPECT_NE(from_file.output.find("k,0.29999999999999999"), std::string::npos);
  const auto flag_wins = invoke({"elliptic", "K", "--config", path, "--format", "json", "--k", "0.4"});
  EXPECT_EQ(json::parse(flag_wins.output)["k"].get<double>(), 0.4);
  std::remove(path.c_str());

  EXPECT_EQ(invoke({"elliptic", "K"}, "csv").output.substr(0, 9), "key,value");
  EXPECT_EQ(invoke({"elliptic", "K", "--format", "json"}, "csv").output.front(), '{');
  EXPECT_EQ(invoke({"elliptic", "K"}, "yaml").exit_code, kExitUsage);
}

TEST(Cli, CsvQuotingAndComplexText) {
  const auto r = invoke({"elliptic", "eval", "--u", "0.3,0.1", "--k", "0.5", "--format", "csv"});
  EXPECT_NE(r.output.find("sn,0.29624708959573443+0.09470138853284954i"), std::string::npos);
}

TEST(Cli, SweepGridFromConfig) {
  const std::string path = ::testing::TempDir() + "ellsl2_sweep_test.cfg";
  {
    std::ofstream f(path);
    f << "js = 1/2,1,3/2\nhs = 0.5\nks = 0,0.5,1\n";
  }
  const auto r = invoke({"sweep", "--config", path});
  std::remove(path.c_str());
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(std::count(r.output.begin(), r.output.end(), '\n'), 10);
}
