#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tsw/io.hpp"

namespace fs = std::filesystem;
using tsw::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result tsw_run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tsw_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

const char* kReversedP3 =
    "tsw v1 ts\nn 3 m 2\ne 0 1\ne 1 2\nt 0 2\nt 1 1\nt 2 0\n";

}  // namespace

TEST_F(Cli, VersionAndUsage) {
  auto v = tsw_run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("tsw 0.1.0"), std::string::npos);
  EXPECT_EQ(tsw_run({"frob"}).code, 2);
  EXPECT_EQ(tsw_run({}).code, 2);
  EXPECT_EQ(tsw_run({"solve", "--algo", "magic", "x"}).code, 2);
  EXPECT_EQ(tsw_run({"--help"}).code, 0);
}

TEST_F(Cli, SolveBfsAndBudget) {
  const auto inst = write("rev.tsw", kReversedP3);
  auto ok = tsw_run({"solve", "--algo", "bfs", inst});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("sol 3\ns 0 1\ns 1 2\ns 0 1\n"), std::string::npos);
  EXPECT_NE(ok.out.find("stats length=3 states="), std::string::npos);
  EXPECT_NE(ok.out.find("class_counts="), std::string::npos);

  auto no = tsw_run({"solve", "--algo", "bfs", "--k", "2", inst});
  EXPECT_EQ(no.code, 1);
  EXPECT_NE(no.out.find("stats length=none"), std::string::npos);

  EXPECT_EQ(tsw_run({"solve", "--algo", "ida", inst}).code, 0);
  EXPECT_EQ(tsw_run({"solve", "--algo", "special", inst}).code, 0);
  EXPECT_EQ(tsw_run({"solve", "--algo", "bounded", "--k", "3", inst}).code, 0);
  EXPECT_EQ(tsw_run({"solve", "--algo", "bounded", inst}).code, 1);
  auto r = tsw_run({"solve", "--algo", "reach", "--k", "2", inst});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "reach k=2 result=no\n");
  EXPECT_EQ(tsw_run({"solve", "--algo", "bfs", "--max-states", "2", inst}).code, 3);
  EXPECT_EQ(tsw_run({"solve", "--algo", "bfs", (dir_ / "missing").string()}).code, 2);
  EXPECT_EQ(tsw_run({"solve", "-"}, kReversedP3).code, 0);
}

TEST_F(Cli, JobsKeepInputOrder) {
  std::vector<std::string> args{"solve", "--jobs", "3"};
  for (int i = 0; i < 6; ++i) {
    const std::string text = i % 2 ? kReversedP3 : "tsw v1 ts\nn 2 m 1\ne 0 1\nt 0 1\nt 1 0\n";
    args.push_back(write("f" + std::to_string(i) + ".tsw", text));
  }
  auto par = tsw_run(args);
  args[2] = "1";
  auto seq = tsw_run(args);
  EXPECT_EQ(par.code, 0);
  EXPECT_EQ(par.out, seq.out);
  std::size_t last = 0;
  for (int i = 0; i < 6; ++i) {
    const auto at = par.out.find("f" + std::to_string(i) + ".tsw");
    ASSERT_NE(at, std::string::npos);
    EXPECT_GE(at, last);
    last = at;
  }
}

TEST_F(Cli, Verify) {
  const auto inst = write("rev.tsw", kReversedP3);
  const auto good = write("good.sol", "sol 3\ns 0 1\ns 1 2\ns 0 1\n");
  const auto bad = write("bad.sol", "sol 1\ns 0 1\n");
  auto v = tsw_run({"verify", inst, good});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out.rfind("valid length=3", 0), 0u);
  auto b = tsw_run({"verify", inst, bad});
  EXPECT_EQ(b.code, 1);
  EXPECT_EQ(b.out.rfind("invalid", 0), 0u);
}

TEST_F(Cli, GenPipelineAlmostTree) {
  const auto x3c = write("x3c.txt", "x3c v1\nuniverse 3 sets 3\nset 0 1 2\nset 0 1 2\nset 0 1 2\n");
  const auto cover = write("cover.txt", "x3c-cover v1\nuse 0\n");
  auto g = tsw_run({"gen", "almost-tree", x3c, "--certificate", cover});
  ASSERT_EQ(g.code, 0) << g.err;
  auto v = tsw_run({"verify", "-"}, g.out);
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(v.out.rfind("valid length=35 budget=35", 0), 0u);
  EXPECT_EQ(tsw::parse_bundle(g.out).instance.size(), 31);
}

TEST_F(Cli, GenToFileAndOtherGenerators) {
  const auto out = (dir_ / "linker.tsw").string();
  EXPECT_EQ(tsw_run({"gen", "-o", out, "linker", "3", "1"}).code, 0);
  EXPECT_EQ(tsw_run({"verify", out}).code, 0);

  const auto tri = write("tri.dg", "digraph v1\nnodes 3 arcs 3\na 0 1\na 1 2\na 2 0\n");
  const auto ham = write("tri.ham", "hamcycle v1\norder 0 1 2\n");
  auto s = tsw_run({"gen", "star-sts", tri, "--certificate", ham});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(tsw_run({"verify", "-"}, s.out).code, 0);
  const auto dec = write("tri.dec", "triangles v1\ntri 0 1 2\n");
  auto c = tsw_run({"gen", "clique-cts", tri, "--certificate", dec});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(tsw_run({"verify", "-"}, c.out).code, 0);
  EXPECT_EQ(tsw_run({"gen", "star-sts", write("loop.dg", "digraph v1\nnodes 1 arcs 1\na 0 0\n")}).code, 1);
}

TEST_F(Cli, FeasibleKernelBoundFo) {
  const auto inst = write("rev.tsw", kReversedP3);
  auto f = tsw_run({"feasible", inst});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.out.rfind("feasible\n", 0), 0u);
  const auto clash = write("clash.tsw", "tsw v1 sts\nn 2 m 1\ne 0 1\nd 0 1 0\nd 1 1 0\n");
  auto nf = tsw_run({"feasible", clash});
  EXPECT_EQ(nf.code, 1);
  EXPECT_EQ(nf.out, "infeasible matched=1/2\n");

  auto k = tsw_run({"kernelize", "--k", "3", inst});
  EXPECT_EQ(k.code, 0);
  EXPECT_NE(k.out.find("# map 0 0"), std::string::npos);
  EXPECT_EQ(tsw::parse_instance(k.out).size(), 3);
  auto kn = tsw_run({"kernelize", "--k", "0", inst});
  EXPECT_EQ(kn.code, 1);
  EXPECT_EQ(kn.out, "verdict no\n");

  EXPECT_EQ(tsw_run({"bound", inst}).out, "lower=2\n");
  EXPECT_EQ(tsw_run({"bound", "--r", "3", inst}).out, "lower=2\nupper=9\n");

  auto fo = tsw_run({"fo", "--k", "1"});
  EXPECT_EQ(fo.code, 0);
  EXPECT_NE(fo.out.find("; atoms 33"), std::string::npos);
  auto ev = tsw_run({"fo", "--k", "2", "--eval", inst});
  EXPECT_EQ(ev.code, 1);
  EXPECT_EQ(ev.out, "eval k=2 result=no\n");
  EXPECT_EQ(tsw_run({"fo", "--k", "0"}).code, 2);
}
