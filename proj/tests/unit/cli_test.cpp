// Copyright 2026 The netspread Authors
//
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef NETSPREAD_CLI_PATH
#error "NETSPREAD_CLI_PATH must name the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
};

Run Cli(const std::string& args) {
  const std::string cmd = std::string(NETSPREAD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("netspread_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  std::string Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
    return Path(name);
  }
  fs::path dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Cli("").code, 2);
  EXPECT_EQ(Cli("frobnicate").code, 2);
  EXPECT_EQ(Cli("simulate --graph cycle:10 --eta 1").code, 2);
  EXPECT_EQ(Cli("simulate --graph cycle:10 --eta 1 --k 11").code, 2);
  EXPECT_EQ(Cli("test --alt-graph cycle:10 --infection x --alpha 2").code, 2);
}

TEST_F(CliTest, SimulateIsDeterministic) {
  const auto a = Cli("simulate --graph torus:10x10 --eta 5 --k 10 --c 5 --seed 3");
  const auto b = Cli("simulate --graph torus:10x10 --eta 5 --k 10 --c 5 --seed 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  size_t ones = 0, stars = 0, lines = 0;
  for (size_t pos = 0; pos < a.out.size(); ++pos) {
    if (a.out[pos] != '\n') continue;
    ++lines;
    ones += a.out[pos - 1] == '1';
    stars += a.out[pos - 1] == '*';
  }
  EXPECT_EQ(lines, 100u);
  EXPECT_EQ(ones, 10u);
  EXPECT_EQ(stars, 5u);
}

TEST_F(CliTest, EdgeListAndTest) {
  const auto edges = Write("g.txt", "# ring\na b\nb c\nc d\nd e\ne a\n");
  const auto status = Write("j.txt", "a 1\nb 1\nc 0\nd 0\ne 0\n");
  const auto r = Cli("test --null-graph star:5 --alt-graph " + edges + " --infection " + status +
                     " --statistic W --exact --json");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"total\": 120"), std::string::npos);
  EXPECT_NE(r.out.find("\"validity\": \"valid\""), std::string::npos);
}

TEST_F(CliTest, DataErrors) {
  const auto edges = Write("bad.txt", "a b c\n");
  EXPECT_EQ(Cli("baseline --graph file:" + edges + " --kind TB --d 2 --k 2").code, 3);
  EXPECT_EQ(Cli("baseline --graph file:" + Path("missing.txt") + " --kind TB --d 2 --k 2").code, 3);
  const auto ring = Write("ring.txt", "a b\nb c\nc a\n");
  const auto status = Write("j.txt", "a 1\nb 2\nc 0\n");
  EXPECT_EQ(Cli("test --alt-graph " + ring + " --infection " + status).code, 3);
}

TEST_F(CliTest, GuardExceeded) {
  const auto j = Path("j.txt");
  ASSERT_EQ(Cli("simulate --graph cycle:12 --eta 1 --k 3 --out " + j).code, 0);
  EXPECT_EQ(Cli("test --alt-graph cycle:12 --infection " + j + " --exact").code, 4);
}

TEST_F(CliTest, CheckAut) {
  const auto r = Cli("check-aut star7 cycle7");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("valid", 0), 0u);
  EXPECT_EQ(Cli("check-aut star:6 path:6").out.rfind("invalid", 0), 0u);
}

TEST_F(CliTest, BaselineAndRisk) {
  const auto b = Cli("baseline --graph torus:50x50 --kind TB --d 2 --k 500 --c 500");
  ASSERT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("always rejects"), std::string::npos);
  const auto r = Cli("risk --bound center --n 100 --k 10 --eta 5 --json");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"lower\""), std::string::npos);
}

TEST_F(CliTest, ExperimentConfig) {
  EXPECT_EQ(Cli("experiment " + Write("empty.json", "")).code, 2);
  EXPECT_EQ(Cli("experiment " + Write("obj.json", "{}")).code, 2);
  EXPECT_EQ(Cli("experiment " + Write("broken.json", "{")).code, 3);
  EXPECT_EQ(Cli("experiment " + Write("schema.json", R"({"schema":"other/9","experiments":[]})")).code, 2);
  const auto cfg = Write("cfg.json", R"({"schema":"netspread.experiment/1","experiments":[
    {"name":"g","null_graph":"empty:100","alt_graph":"torus:10x10","eta":[10],"k":10,"c":5,
     "replicates":20,"algorithms":[{"type":"permutation","statistic":"W","B":50,"alpha":0.05},
                                   {"type":"TB","d":2}]}]})");
  const auto a = Cli("experiment " + cfg);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')),
            "experiment,algorithm,threshold,type_i,type_ii@eta=10,diagnosis");
  EXPECT_NE(a.out.find("always rejects"), std::string::npos);
  EXPECT_EQ(Cli("experiment " + cfg + " --threads 1").out, a.out);
}

}  // namespace
