// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "tct/cli/scenario.hpp"
#include "tct/common/error.hpp"

namespace tct::cli {
namespace {

namespace fs = std::filesystem;

cli::RunConfig config() {
  RunConfig c;
  c.solver = testing::solver();
  return c;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(TCT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / "tct_cli_test" / name;
  fs::create_directories(p.parent_path());
  std::ofstream(p) << text;
  return p;
}

TEST(Cli, ParseCall) {
  CallSpec c = parse_call("token.transferProxy(a, b, 2^255+1, (3))");
  EXPECT_EQ(c.target, "token");
  EXPECT_EQ(c.function, "transferProxy");
  EXPECT_EQ(c.args, (std::vector<std::string>{"a", "b", "2^255+1", "(3)"}));
  CallSpec d = parse_call("WalletLike()");
  EXPECT_TRUE(d.target.empty());
  EXPECT_EQ(d.function, "WalletLike");
  EXPECT_TRUE(d.args.empty());
  EXPECT_THROW(parse_call("nocall"), Error);
}

TEST(Cli, Values) {
  Session s(config());
  s.run_line("account alice 0xa11ce", ".");
  EXPECT_EQ(s.resolve_value("2^255 + 1").to_big(), pow2(255) + 1);
  EXPECT_EQ(s.resolve_value("2^256 - 1"), Word256::max());
  EXPECT_EQ(s.resolve_value("-1"), Word256::max());
  EXPECT_EQ(s.resolve_value("3 * (4 + 1)"), Word256(15));
  EXPECT_EQ(s.resolve_value("true"), Word256(1));
  EXPECT_EQ(s.resolve_address("alice"), Address::from_u64(0xa11ce));
  EXPECT_THROW(s.resolve_value("nobody"), Error);
  EXPECT_THROW(s.resolve_address("2^160"), Error);
}

TEST(Cli, EmptyScenarioHasEmptyReport) {
  Session s(config());
  s.run_file(write_temp("empty.tct", "# nothing\n\n"));
  EXPECT_TRUE(s.outcome().ok);
  EXPECT_EQ(s.outcome().report_text(), "");
}

TEST(Cli, FirstFailedExpectationStopsTheRun) {
  Session s(config());
  std::string corpus = testing::source_dir() + "/corpus/multi_vuln_token.msol";
  s.run_file(write_temp("fail.tct", "load " + corpus +
                                        "\naccount d 0xd0\ndeploy t MultiVulnToken(5) from d\n"
                                        "expect-storage t.totalSupply == 6\nexpect-storage t.totalSupply == 5\n"));
  EXPECT_FALSE(s.outcome().ok);
  EXPECT_NE(s.outcome().failure.find("has 5"), std::string::npos) << s.outcome().failure;
  EXPECT_EQ(s.outcome().report.back(), "    expectation failed: node 0 has 5");
}

TEST(Cli, UnknownDirectiveIsUsageError) {
  Session s(config());
  try {
    s.run_file(write_temp("bad.tct", "frobnicate\n"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Usage);
    EXPECT_NE(std::string(e.what()).find("bad.tct:1"), std::string::npos) << e.what();
  }
}

TEST(Cli, TheoremFileRoundTrip) {
  Session s(config());
  std::string dir = testing::source_dir();
  fs::path file = write_temp("thm/reuse.tct",
                             "load " + dir + "/corpus/multi_vuln_token.msol\n"
                             "account d 0xd0\naccount a 0xa1\n"
                             "deploy t MultiVulnToken(1000) from d\n"
                             "prove p t.transferProxy(d, a, 1, 0) from d save thm.json under " +
                                 testing::kTransferHypothesis + "\nexpect-verdict Proven\n");
  s.run_file(file);
  ASSERT_TRUE(s.outcome().ok) << s.outcome().report_text();
  auto bundle = load_theorem_file((file.parent_path() / "thm.json").string());
  EXPECT_EQ(bundle.theorem.function, "transferProxy");
  EXPECT_EQ(bundle.witness.function, "transferProxy");

  Session fresh(config());
  fs::path use = write_temp("thm/use.tct",
                            "load " + dir + "/corpus/multi_vuln_token.msol\n"
                            "account d 0xd0\naccount b 0xb0\n"
                            "deploy t MultiVulnToken(1000) from d\n"
                            "import-theorem thm.json\nexpect-accept\nexpect-theorems 1\n"
                            "submit x t.transferProxy(d, b, 4, 1) from d\nexpect-commit\n");
  fresh.run_file(use);
  EXPECT_TRUE(fresh.outcome().ok) << fresh.outcome().report_text();
}

TEST(Cli, ExitCodes) {
  std::string dir = testing::source_dir();
  std::string solver = std::string("--solver ") + TCT_TEST_SOLVER;
  EXPECT_EQ(run_cli("run " + solver + " " + dir + "/tests/data/empty.tct"), 0);
  EXPECT_EQ(run_cli("run " + solver + " " + dir + "/tests/data/fails.tct"), 1);
  EXPECT_EQ(run_cli("run " + dir + "/tests/data/bad_directive.tct"), 2);
  EXPECT_EQ(run_cli("frobnicate"), 2);
  EXPECT_EQ(run_cli("prove --solver /nonexistent/z3 --setup " + dir +
                    "/tests/data/token_setup.tct --from relay 'token.transferProxy(deployer, attacker, 1, 0)'"),
            3);
  EXPECT_EQ(run_cli("prove " + solver + " --setup " + dir + "/scenarios/reuse.tct --from deployer " +
                    "'token.transferProxy(deployer, bob, 1, 0)' --under '" + testing::kTransferHypothesis + "'"),
            0);
  EXPECT_EQ(run_cli("prove " + solver + " --setup " + dir +
                    "/scenarios/attack1.tct --from relay 'token.transferProxy(deployer, attacker, 1, 0)'"),
            1);
  EXPECT_EQ(run_cli("inspect repo --setup " + dir + "/scenarios/reuse.tct " + solver), 0);
}

}  // namespace
}  // namespace tct::cli
