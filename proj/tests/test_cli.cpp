#include "hyperc/instance_io.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HYPERC_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string("--input ") + HYPERC_FIXTURE_DIR + "/" + name; }

}  // namespace

TEST(Cli, UcsOnExample) {
  auto r = run(fixture("example1.json") + " --op ucs --format json");
  ASSERT_EQ(r.code, 0);
  auto rep = hyperc::parse_report(r.out);
  EXPECT_EQ(rep.status, "ok");
  EXPECT_EQ(rep.result["terminal"], "omega*1+1");
  EXPECT_EQ(rep.result["stages"][1]["subgroup"]["quotient_X"], "Z/2");
  EXPECT_EQ(rep.result["stages"][2]["subgroup"]["quotient_X"], "Z/4");
}

TEST(Cli, TextOutput) {
  auto r = run(fixture("heisenberg.json") + " --op nilclass");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("class 2"), std::string::npos);
  r = run(fixture("heisenberg_torus.json") + " --op hypercenter");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lambda: 1"), std::string::npos);
}

TEST(Cli, ExitCodeTwoOnBadInput) {
  EXPECT_EQ(run(fixture("bad_table.json") + " --op center").code, 2);
  EXPECT_EQ(run("--input /nonexistent.json --op center").code, 2);
  EXPECT_EQ(run("--op center").code, 2);
  EXPECT_EQ(run("--op frobnicate").code, 2);
  EXPECT_EQ(run("--op verify --suite nope").code, 2);
}

TEST(Cli, ExitCodeThreeOnMixedCenter) {
  EXPECT_EQ(run(fixture("mixed_center.json") + " --op center").code, 3);
  EXPECT_EQ(run(fixture("mixed_center.json") + " --op ucs").code, 3);
}

TEST(Cli, ExitCodeFourOnUndeterminedLimit) {
  EXPECT_EQ(run(fixture("example1.json") + " --op ucs --max-limit-stages 0").code, 4);
  EXPECT_EQ(run(fixture("example1.json") + " --op hypercenter --max-limit-stages 0").code, 4);
}

TEST(Cli, ExitCodeFiveOnPrecondition) {
  auto r = run(fixture("example1.json") + " --op fitting --format json");
  EXPECT_EQ(r.code, 5);
  EXPECT_NE(r.out.find("requires connected group"), std::string::npos);
  EXPECT_EQ(run(fixture("example1.json") + " --op oracle-compare").code, 5);
}

TEST(Cli, OracleCompareAndVerify) {
  EXPECT_EQ(run(fixture("dihedral_dual.json") + " --op oracle-compare").code, 0);
  auto r = run("--op verify --suite oracle-bridge --seed 7 --count 50 --format json");
  ASSERT_EQ(r.code, 0);
  auto rep = hyperc::parse_report(r.out);
  EXPECT_EQ(rep.result["failed"], 0);
  EXPECT_EQ(rep.result["skipped"], 0);
  EXPECT_GE(rep.result["passed"].get<int>(), 50);
}
