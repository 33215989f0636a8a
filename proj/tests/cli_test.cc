/*
Copyright 2026 The xclust Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.h"
#include "xclust/cli.h"
#include "xclust/io.h"

namespace xclust {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("xclust_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string File(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string Path(const std::string& name) { return (dir_ / name).string(); }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return RunCli(args, out_, err_);
  }
  json Report() { return json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

const char kXor[] = "x,y,cluster\n0,0,1\n1,1,1\n0,1,2\n1,0,2\n";
const char kSeparated[] = "x,y,cluster\n0,0,1\n1,1,1\n5,0,2\n6,1,2\n";
const char kLine[] = "x\n0\n1\n10\n11\n";

TEST_F(CliTest, CheckExitCodes) {
  EXPECT_EQ(Run({"check", File("s.csv", kSeparated)}), kExitOk);
  EXPECT_TRUE(Report()["explainable"].get<bool>());
  EXPECT_EQ(Run({"check", File("x.csv", kXor)}), kExitNegative);
  EXPECT_FALSE(Report()["explainable"].get<bool>());
  EXPECT_EQ(Run({"check", File("gap.csv", "x,cluster\n0,1\n1,3\n")}), kExitError);
  EXPECT_FALSE(err_.str().empty());
  EXPECT_EQ(Run({"check", File("nolabel.csv", "x,y\n0,1\n")}), kExitError);
  EXPECT_EQ(Run({"check", File("bad.csv", "x,cluster\n0,1\nfoo,2\n")}), kExitError);
  EXPECT_EQ(Run({"check", Path("missing.csv")}), kExitError);
  EXPECT_EQ(Run({"check", File("neg.csv", "x,cluster\n1,-1\n")}), kExitError);
  EXPECT_EQ(Run({"check", File("lab.csv", "x,group\n0,1\n5,2\n"), "--label-col",
                 "group"}),
            kExitOk);
}

TEST_F(CliTest, ExplainGreedyAndExact) {
  const std::string sep = File("s.csv", kSeparated);
  EXPECT_EQ(Run({"explain", sep}), kExitOk);
  EXPECT_TRUE(Report()["result"]["removed"].empty());

  const std::string x = File("x.csv", kXor);
  EXPECT_EQ(Run({"explain", x, "--method", "exact", "--s", "0"}), kExitNegative);
  EXPECT_EQ(Run({"explain", x, "--method", "exact", "--s", "1"}), kExitNegative);
  EXPECT_EQ(Run({"explain", x, "--method", "exact", "--s", "2"}), kExitOk);
  const json r = Report();
  EXPECT_EQ(r["result"]["removed_count"], 2);
  EXPECT_EQ(r["result"]["emptied_labels"].size(), 1u);
  const ParsedTree t = TreeFromJson(r["tree"]);
  EXPECT_TRUE(ValidateTree(t.tree, 2, 2, true).empty());

  EXPECT_EQ(Run({"explain", x, "--method", "exact"}), kExitError);
  EXPECT_EQ(Run({"explain", x, "--method", "magic"}), kExitError);
  EXPECT_EQ(Run({"explain", x, "--format", "dot"}), kExitOk);
  EXPECT_NE(out_.str().find("digraph"), std::string::npos);
}

TEST_F(CliTest, ExplainGuardRail) {
  std::string big = "x,cluster\n";
  for (int i = 0; i < 41; ++i) {
    big += std::to_string(i) + "," + std::to_string(i % 2 + 1) + "\n";
  }
  const std::string path = File("big.csv", big);
  EXPECT_EQ(Run({"explain", path, "--method", "exact", "--s", "1"}), kExitError);
  EXPECT_NE(err_.str().find("greedy"), std::string::npos);
  EXPECT_EQ(Run({"explain", path, "--method", "exact", "--s", "1", "--force"}),
            kExitNegative);
  EXPECT_FALSE(Report()["warnings"].empty());
}

TEST_F(CliTest, KernelWritesCsvAndMapping) {
  std::string text = "x,y,cluster\n";
  testing::Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    text += std::to_string(testing::Uniform(rng, 0, 1000)) + "," +
            std::to_string(testing::Uniform(rng, 0, 1000)) + "," +
            std::to_string(i % 2 + 1) + "\n";
  }
  const std::string out = Path("kernel.csv");
  EXPECT_EQ(Run({"kernel", File("in.csv", text), "--s", "1", "--output", out}),
            kExitOk);
  const json r = Report();
  EXPECT_LE(r["result"]["kernel_size"].get<int>(), 16);
  EXPECT_EQ(r["result"]["size_bound"], 16);
  const Table kernel = ReadCsvFile(out, "cluster", true);
  EXPECT_EQ(kernel.dataset.size(), r["result"]["kernel_size"].get<int>());
  std::ifstream map(out + ".map.json");
  EXPECT_EQ(json::parse(map)["original_ids"].size(),
            static_cast<std::size_t>(kernel.dataset.size()));
  EXPECT_EQ(Run({"kernel", File("in2.csv", text), "--s", "1", "--output",
                 Path("no/such/dir/k.csv")}),
            kExitError);
}

TEST_F(CliTest, FitMethods) {
  const std::string line = File("line.csv", kLine);
  EXPECT_EQ(Run({"fit", line, "--k", "2"}), kExitOk);
  EXPECT_DOUBLE_EQ(Report()["result"]["cost"].get<double>(), 1.0);
  EXPECT_EQ(Run({"fit", line, "--k", "2", "--method", "branch"}), kExitOk);
  EXPECT_DOUBLE_EQ(Report()["result"]["cost"].get<double>(), 1.0);
  EXPECT_EQ(Run({"fit", line, "--k", "1", "--cost", "medians"}), kExitOk);
  EXPECT_DOUBLE_EQ(Report()["result"]["cost"].get<double>(), 20.0);

  EXPECT_EQ(Run({"fit", line, "--k", "2", "--method", "approx", "--epsilon",
                 "0.4"}),
            kExitOk);
  const json a = Report();
  EXPECT_EQ(a["result"]["band"], 0);
  EXPECT_DOUBLE_EQ(a["result"]["cost"].get<double>(), 1.0);
  EXPECT_EQ(Run({"fit", line, "--k", "2", "--method", "approx", "--epsilon",
                 "0.5", "--threads", "2"}),
            kExitOk);
  EXPECT_LE(Report()["result"]["removed_count"].get<int>(), 2);

  EXPECT_EQ(Run({"fit", line, "--k", "5"}), kExitError);
  EXPECT_EQ(Run({"fit", line, "--k", "2", "--method", "approx"}), kExitError);
  EXPECT_EQ(Run({"fit", line, "--k", "2", "--cost", "huber"}), kExitError);
  EXPECT_EQ(Run({"fit", line}), kExitError);
}

TEST_F(CliTest, BaselineRatio) {
  const std::string line = File("line.csv", kLine);
  EXPECT_EQ(Run({"baseline", line, "--k", "2", "--seed", "3",
                 "--explainable-cost", "1"}),
            kExitOk);
  json r = Report();
  EXPECT_DOUBLE_EQ(r["result"]["cost"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(r["result"]["ratio"].get<double>(), 1.0);
  EXPECT_EQ(Run({"baseline", line, "--k", "4", "--explainable-cost", "0"}), kExitOk);
  EXPECT_EQ(Report()["result"]["ratio"], "n/a");
  EXPECT_EQ(Run({"baseline", line, "--k", "1", "--explainable-cost", "101"}),
            kExitOk);
  EXPECT_DOUBLE_EQ(Report()["result"]["ratio"].get<double>(), 1.0);
  EXPECT_EQ(Run({"baseline", line, "--k", "9"}), kExitError);
}

TEST_F(CliTest, GenIsDeterministicAndShaped) {
  EXPECT_EQ(Run({"gen", "--k", "3", "--per-cluster", "5", "--seed", "8"}), kExitOk);
  const std::string first = out_.str();
  EXPECT_EQ(Run({"gen", "--k", "3", "--per-cluster", "5", "--seed", "8"}), kExitOk);
  EXPECT_EQ(out_.str(), first);

  const std::string sep = Path("sep.csv");
  EXPECT_EQ(Run({"gen", "--k", "2", "--shape", "separated", "--output", sep}),
            kExitOk);
  EXPECT_EQ(Run({"check", sep}), kExitOk);

  const std::string x = Path("xor.csv");
  EXPECT_EQ(Run({"gen", "--k", "2", "--per-cluster", "2", "--shape", "xor",
                 "--output", x}),
            kExitOk);
  EXPECT_EQ(Run({"check", x}), kExitNegative);

  EXPECT_EQ(Run({"gen", "--k", "3", "--shape", "xor"}), kExitError);
  EXPECT_EQ(Run({"gen", "--k", "0"}), kExitError);
  EXPECT_EQ(Run({"gen", "--k", "2", "--output", Path("no/such/dir/g.csv")}),
            kExitError);
}

TEST_F(CliTest, HiddenOracle) {
  const std::string x = File("x.csv", kXor);
  EXPECT_EQ(Run({"oracle", x, "--problem", "explanation", "--s", "1"}),
            kExitNegative);
  EXPECT_EQ(Run({"oracle", x, "--problem", "explanation", "--s", "2"}), kExitOk);
  const std::string line = File("line.csv", kLine);
  EXPECT_EQ(Run({"oracle", line, "--problem", "explainable", "--k", "2"}), kExitOk);
  EXPECT_DOUBLE_EQ(Report()["result"]["cost"].get<double>(), 1.0);
  EXPECT_EQ(Run({"oracle", line, "--problem", "unconstrained", "--k", "2"}),
            kExitOk);
  EXPECT_EQ(Run({"--help"}), kExitOk);
  EXPECT_EQ(out_.str().find("oracle"), std::string::npos);
}

TEST_F(CliTest, NeverCrashesOnGarbage) {
  const std::vector<std::string> junk = {
      "", ",", "x\n\n", "x,cluster\n1,1,1\n", "\xff\xfe", "x,cluster\n1e999,1\n",
      "x,cluster\n-,1\n", "x,cluster\n1,99999999999\n"};
  int i = 0;
  for (const std::string& text : junk) {
    const std::string path = File("junk" + std::to_string(i++) + ".csv", text);
    for (const auto& cmd : std::vector<std::vector<std::string>>{
             {"check", path},
             {"explain", path},
             {"fit", path, "--k", "1"},
             {"kernel", path, "--s", "0", "--output", Path("k.csv")},
             {"baseline", path, "--k", "1"}}) {
      EXPECT_EQ(Run(cmd), kExitError) << text;
    }
  }
  EXPECT_EQ(Run({}), kExitError);
  EXPECT_EQ(Run({"fit", "--k", "notanumber", "x"}), kExitError);
}

}  // namespace
}  // namespace xclust
