// Copyright 2026 The pathembed Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end runs of the command-line tool. PATHEMBED_CLI and FIXTURE_DIR
// come from the build.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(PATHEMBED_CLI) + " " + args + " 2>&1";
  Outcome r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, p)) r.out += buf;
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& f) {
  std::ifstream in(f, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("pathembed_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string fixture() const { return std::string(FIXTURE_DIR) + "/worked_example.top"; }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, GenWritesNodeLines) {
  const Outcome r = run("gen --model waxman --nodes 100 --degree 4 --seed 1 -o " + path("t.top"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("nodes=100"), std::string::npos);
  EXPECT_NE(r.out.find("avg_degree="), std::string::npos);
  std::istringstream in(slurp(path("t.top")));
  int node_lines = 0;
  for (std::string line; std::getline(in, line);) node_lines += line.rfind("node ", 0) == 0;
  EXPECT_EQ(node_lines, 100);
}

TEST_F(Cli, GenIsDeterministic) {
  ASSERT_EQ(run("gen --model waxman --nodes 100 --degree 4 --seed 1 -o " + path("a.top")).code, 0);
  ASSERT_EQ(run("gen --model waxman --nodes 100 --degree 4 --seed 1 -o " + path("b.top")).code, 0);
  EXPECT_EQ(slurp(path("a.top")), slurp(path("b.top")));
}

TEST_F(Cli, GenRejectsBadAlpha) {
  const Outcome r = run("gen --model waxman --alpha 0");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("alpha"), std::string::npos);
}

TEST_F(Cli, GenFailureExitCode) {
  EXPECT_EQ(run("gen --nodes 10 --degree 30 -o " + path("x.top")).code, 3);
  EXPECT_EQ(run("gen --frobnicate").code, 2);
}

TEST_F(Cli, SolveWorkedExample) {
  const std::string before = slurp(fixture());
  for (const char* backend : {"nm-general", "nm-l1"}) {
    const Outcome r = run("solve " + fixture() + " --src X --dst Y --backend " + backend +
                      " --link \"0 >= 5\" --path \"0 < 5\"");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.rfind("status=ok hops=3 path=X,B,A,Y ", 0), 0u) << r.out;
  }
  EXPECT_EQ(slurp(fixture()), before);  // input untouched
}

TEST_F(Cli, SolveKspOneIsInfeasible) {
  const Outcome r = run("solve " + fixture() +
                    " --src X --dst Y --backend ksp:1:by_hops --link \"0 >= 5\" --path \"0 < 5\"");
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(r.out.rfind("status=infeasible", 0), 0u) << r.out;
}

TEST_F(Cli, SolveSameNode) {
  const Outcome r = run("solve " + fixture() + " --src 0 --dst 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("status=ok hops=0", 0), 0u) << r.out;
}

TEST_F(Cli, SolveErrors) {
  EXPECT_EQ(run("solve " + fixture() + " --src X --dst Q").code, 2);
  EXPECT_EQ(run("solve " + fixture() + " --src X --dst Y --backend fast").code, 2);
  EXPECT_EQ(run("solve " + fixture() + " --src X --dst Y --link \"0 > 5\"").code, 2);
  EXPECT_EQ(run("solve " + fixture() + " --src X --dst Y --path \"3 < 5\"").code, 2);
  std::ofstream(path("bad.top")) << "nodes 2 link_metrics 1 path_metrics 1\nedge 0 1 x 1\n";
  const Outcome r = run("solve " + path("bad.top") + " --src 0 --dst 1");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("line 2"), std::string::npos);
  std::ofstream(path("unreach.top")) << "nodes 2 link_metrics 1 path_metrics 1\n";
  EXPECT_EQ(run("solve " + path("unreach.top") + " --src 0 --dst 1").code, 4);
}

TEST_F(Cli, RunWritesCsvAndPlotData) {
  std::ofstream(path("s.cfg")) << "scenario = steering\nnodes = 60\npairs = 5\n"
                                  "backends = nm-l1, edijkstra\nseeds = 1..2\n"
                                  "output = "
                               << path("out.csv") << "\n";
  Outcome r = run("run " + path("s.cfg") + " --emit-plotdata --jobs 2");
  ASSERT_EQ(r.code, 0) << r.out;
  const std::string first = slurp(path("out.csv"));
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 5);
  for (const char* f : {"throughput_nm-l1.dat", "throughput_edijkstra.dat", "energy_nm-l1.dat",
                        "hops_edijkstra.dat"}) {
    EXPECT_TRUE(fs::exists(path(f))) << f;
  }
  const std::string plot = slurp(path("throughput_nm-l1.dat"));
  r = run("run " + path("s.cfg") + " --emit-plotdata");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(slurp(path("out.csv")), first);
  EXPECT_EQ(slurp(path("throughput_nm-l1.dat")), plot);
}

TEST_F(Cli, RunPaperScaleWarns) {
  // Node count pinned small so only the warning path is exercised.
  std::ofstream(path("p.cfg")) << "scenario = steering\nscale = paper\nnodes = 40\npairs = 2\n"
                                  "backends = nm-l1\n";
  const Outcome r = run("run " + path("p.cfg") + " -o " + path("p.csv"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("warning"), std::string::npos);
}

TEST_F(Cli, RunConfigErrors) {
  std::ofstream(path("bad.cfg")) << "colour = blue\n";
  Outcome r = run("run " + path("bad.cfg"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("colour"), std::string::npos);
  EXPECT_EQ(run("run " + path("missing.cfg")).code, 2);
  // Valid config that fails while running: more pairs than a tiny graph has.
  std::ofstream(path("rt.cfg")) << "nodes = 3\ndegrees = 2\npairs = 50\nbackends = nm-l1\n";
  r = run("run " + path("rt.cfg") + " -o " + path("rt.csv"));
  EXPECT_EQ(r.code, 5) << r.out;
}

}  // namespace
