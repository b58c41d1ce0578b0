#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"

using qit::testing::corpus_path;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded; args are passed through the shell.
Run run(const std::string& args) {
  const std::string cmd = std::string(QIT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string alg(const char* name) { return "'" + corpus_path(name) + "'"; }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("qit_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, PhiAndPsiExamples) {
  auto r = run("phi " + alg("e5") + " --module 'S(1)+S(5)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  r = run("phi " + alg("e5") + " --module 'S(1)'");
  EXPECT_EQ(r.out, "0\n");
  r = run("psi " + alg("a2") + " --module 'S(1)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, NonMonomialGate) {
  EXPECT_EQ(run("phi " + alg("ex4") + " --module 'S(1)'").code, 5);
  EXPECT_EQ(run("psi " + alg("ex4") + " --module 'S(1)'").code, 5);
  EXPECT_EQ(run("export " + alg("ex4") + " --dot -").code, 5);
}

TEST(Cli, ProjectiveAndInjectiveDimensions) {
  auto r = run("pd " + alg("ex4") + " --module 'I(1)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  r = run("id " + alg("ex4") + " --module 'P(2)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  r = run("pd " + alg("e5") + " --module 'S(1)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "inf\n");
}

TEST(Cli, UnknownAtCutoffExitsFour) {
  auto r = run("pd " + alg("gentle_a4_two") + " --module 'S(1)' --cutoff 1");
  // Monomial pds are decided by the syzygy graph regardless of the cutoff.
  EXPECT_EQ(r.code, 0);
  r = run("pd " + alg("comm_square") + " --module 'S(1)' --cutoff 1");
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(r.out, "unknown\n");
}

TEST(Cli, Ext) {
  auto r = run("ext " + alg("e5") + " --from 'S(1)' --to 'P(5)' --degree 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  r = run("ext " + alg("a2") + " --from 'S(1)' --to 'S(2)' --degree 1");
  EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, AnalyzeReports) {
  auto r = run("analyze " + alg("ex4"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("GORENSTEIN(1)"), std::string::npos);
  r = run("analyze " + alg("ex4") + " --format kv");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dim.findim = 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("dim.phidim = 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("dim.psidim = 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("gorenstein.m = 1\n"), std::string::npos);

  r = run("analyze " + alg("e5") + " --format kv");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("simple.1.phi = 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("simple.1.pd = inf\n"), std::string::npos);
  EXPECT_NE(r.out.find("dim.phidim = [1, 2]\n"), std::string::npos);

  r = run("analyze " + alg("kx2") + " --format kv");
  EXPECT_NE(r.out.find("gorenstein.selfinjective = yes\n"), std::string::npos);
  EXPECT_NE(r.out.find("dim.phidim = 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("SELFINJECTIVE"), std::string::npos);
}

TEST(Cli, AnalyzeUnknownStillPrintsReport) {
  auto r = run("analyze " + alg("comm_square") + " --cutoff 1 --format kv");
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("algebra.dim = "), std::string::npos);
}

TEST(Cli, ExportToStdoutAndFile) {
  auto r = run("export " + alg("kx2") + " --dot -");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("c0 -> c0;"), std::string::npos);
  r = run("export " + alg("e5") + " --csv -");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(",INF,"), std::string::npos);

  const auto path = (std::filesystem::temp_directory_path() / "qit_cli_e5.dot").string();
  EXPECT_EQ(run("export " + alg("e5") + " --dot '" + path + "'").code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run("export " + alg("e5") + " --dot -").out);
}

TEST(Cli, OutputIsByteStable) {
  for (const char* name : {"ex4", "e5", "gentle_c3", "nakayama_c3_j3"}) {
    const auto first = run("analyze " + alg(name));
    EXPECT_EQ(first.out, run("analyze " + alg(name)).out) << name;
    EXPECT_FALSE(first.out.empty()) << name;
  }
  EXPECT_EQ(run("export " + alg("e5") + " --csv -").out, run("export " + alg("e5") + " --csv -").out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("phi " + alg("e5")).code, 1);
  EXPECT_EQ(run("analyze /nonexistent/file.alg").code, 1);
  EXPECT_EQ(run("export " + alg("e5")).code, 1);
  EXPECT_EQ(run("export " + alg("e5") + " --dot - --csv -").code, 1);
  EXPECT_EQ(run("analyze " + alg("e5") + " --format yaml").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ParseErrors) {
  EXPECT_EQ(run("phi " + alg("e5") + " --module 'S(9)'").code, 2);
  EXPECT_EQ(run("phi " + alg("e5") + " --module 'Q(1)'").code, 2);
  EXPECT_EQ(run("phi " + alg("e5") + " --module 'I(1)'").code, 2);
  const auto bad = temp_file("bad.alg", "vertex 1 2\narrow a 1 2\nrel a*z\n");
  EXPECT_EQ(run("analyze '" + bad + "'").code, 2);
}

TEST(Cli, NotAdmissible) {
  const auto loop = temp_file("loop.alg", "vertex 1\narrow x 1 1\n");
  EXPECT_EQ(run("analyze '" + loop + "'").code, 3);
  const auto linear = temp_file("linear.alg", "vertex 1 2\narrow a 1 2\narrow b 1 2\nrel a - b\n");
  EXPECT_EQ(run("analyze '" + linear + "'").code, 3);
}
