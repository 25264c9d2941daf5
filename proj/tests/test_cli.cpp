#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "seqcore/read.hpp"
#include "support/fixtures.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("seqcore_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Outcome cli(const std::string& args, const std::string& env = {}) {
  fs::path err = scratch() / "stderr.txt";
  std::string cmd = env + " '" SEQCORE_CLI_PATH "' " + args + " 2>'" + err.string() + "'";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, fixtures::slurp(err.string())};
}

std::string program(const std::string& name) { return std::string("'") + SEQCORE_PROGRAMS_DIR + "/" + name + "'"; }

std::string write(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return "'" + p.string() + "'";
}

}  // namespace

TEST(Cli, CheckCountsDeclarations) {
  Outcome r = cli("check " + program("f.seq"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "ok (3 declarations)\n");
  EXPECT_EQ(r.err, "");
}

TEST(Cli, RunSecondClause) {
  Outcome r = cli("run " + program("f_run.seq") + " --entry f --arg 'inr q'");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "q []\n");
}

TEST(Cli, RunFirstClauseStopsAtPostulate) {
  Outcome r = cli("run " + program("f_run.seq") + " --entry f --arg 'inl (q, r)'");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "add (thunk(q []) :: thunk(r []) :: [])\n");
}

TEST(Cli, TraceNamesRules) {
  Outcome r = cli("trace " + program("f_run.seq") + " --entry f --arg 'inr q'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(" R1 "), std::string::npos) << r.out;
  EXPECT_EQ(r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1), "q []\n");
  Outcome flag = cli("run " + program("f_run.seq") + " --entry f --arg 'inr q' --trace");
  EXPECT_EQ(flag.out, r.out);
}

TEST(Cli, FuelExhaustion) {
  Outcome r = cli("run " + program("f_run.seq") + " --entry f --arg 'inl (q, r)' --fuel 1");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("fuel"), std::string::npos);
  Outcome env = cli("run " + program("f_run.seq") + " --entry f --arg 'inl (q, r)'", "SEQCORE_FUEL=2");
  EXPECT_EQ(env.code, 3);
  Outcome flag_wins = cli("run " + program("f_run.seq") + " --entry f --arg 'inl (q, r)' --fuel 100", "SEQCORE_FUEL=2");
  EXPECT_EQ(flag_wins.code, 0);
}

TEST(Cli, TypeAndCoverageErrorsExitOne) {
  Outcome coverage = cli("check " + write("partial.seq", "atom a\ng : a + a -> a\ng (inl x) = x\n"));
  EXPECT_EQ(coverage.code, 1);
  EXPECT_NE(coverage.err.find("inr _"), std::string::npos) << coverage.err;
  EXPECT_EQ(coverage.out, "");
  Outcome arg = cli("run " + program("f_run.seq") + " --entry f --arg 'q'");
  EXPECT_EQ(arg.code, 1);
  Outcome dependent_only = cli("check " + program("sigma.seq"));
  EXPECT_EQ(dependent_only.code, 1);
  EXPECT_EQ(cli("check --dependent " + program("sigma.seq")).code, 0);
}

TEST(Cli, ParseErrorsExitTwo) {
  Outcome r = cli("check " + write("bad.seq", "atom a\ng : a ->\n"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(":3:"), std::string::npos) << r.err;
  EXPECT_EQ(cli("run " + program("f_run.seq") + " --entry f --arg '(q,'").code, 2);
}

TEST(Cli, UsageErrorsExitFour) {
  EXPECT_EQ(cli("run " + program("f_run.seq")).code, 4);
  EXPECT_EQ(cli("check").code, 4);
  EXPECT_EQ(cli("frobnicate " + program("f.seq")).code, 4);
  EXPECT_EQ(cli("check /nonexistent/x.seq").code, 4);
  EXPECT_EQ(cli("run " + program("f_run.seq") + " --entry nope").code, 4);
  EXPECT_EQ(cli("run " + program("f_run.seq") + " --entry f --fuel 0").code, 4);
}

TEST(Cli, WarningsGoToStderr) {
  Outcome r = cli("check " + write("overlap.seq", "atom a\nh : a + a -> a\nh (inl x) = x\nh (inr y) = y\nh (inl z) = z\n"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ok (2 declarations)\n");
  EXPECT_NE(r.err.find("unused"), std::string::npos) << r.err;
}

TEST(Cli, CoreOutputReparses) {
  for (const char* file : {"f.seq", "sums.seq", "combinators.seq", "structural.seq"}) {
    Outcome r = cli("core " + program(file));
    ASSERT_EQ(r.code, 0) << file << r.err;
    seqcore::Sig sig = seqcore::read_program(r.out);
    EXPECT_EQ(seqcore::print_program(sig), r.out) << file;
  }
  Outcome dep = cli("core --dependent " + program("sigma.seq"));
  ASSERT_EQ(dep.code, 0) << dep.err;
  EXPECT_EQ(seqcore::print_program(seqcore::read_program(dep.out)), dep.out);
}
