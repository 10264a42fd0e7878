// Copyright 2026 The fairmt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <fstream>
#include <string>

#include "fairmt/io.h"
#include "fairmt/pipeline.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fairmt {
namespace {

namespace fs = std::filesystem;
using ::fairmt::testing::RunCommand;
using ::fairmt::testing::TempDir;

std::string Cli() { return testing::CliBinary().string(); }

TEST(CliTest, HelpAndUsageErrors) {
  std::string out;
  EXPECT_EQ(RunCommand(Cli() + " --help", &out), 0);
  EXPECT_NE(out.find("templates"), std::string::npos);
  EXPECT_EQ(RunCommand(Cli(), &out), 1);
  EXPECT_EQ(RunCommand(Cli() + " run --characteristic age", &out), 1);
  EXPECT_EQ(RunCommand(Cli() + " frobnicate", &out), 1);
}

TEST(CliTest, MissingCorpusIsConfigError) {
  TempDir dir;
  std::string out;
  EXPECT_EQ(RunCommand(Cli() + " run --corpus " + (dir.path() / "nope.csv").string() +
                           " --out " + dir.path().string(),
                       &out),
            1);
  EXPECT_NE(out.find("corpus not found"), std::string::npos) << out;
}

TEST(CliTest, RunThenRerunStagesFromSavedConfig) {
  TempDir dir;
  std::ofstream(dir.path() / "c.csv") << testing::SyntheticCorpusCsv(20, 4, false);
  const std::string out_dir = (dir.path() / "out").string();
  std::string out;
  ASSERT_EQ(RunCommand(Cli() + " run --characteristic occupation --corpus " +
                           (dir.path() / "c.csv").string() + " --out " + out_dir,
                       &out),
            0)
      << out;
  EXPECT_NE(out.find("[templates]"), std::string::npos) << out;
  EXPECT_NE(out.find("[detect]"), std::string::npos) << out;
  const std::string mutants = *ReadFileToString(fs::path(out_dir) / kMutantsFile);

  // The later stages pick the characteristic up from out/config.json.
  ASSERT_EQ(RunCommand(Cli() + " mutants --out " + out_dir, &out), 0) << out;
  EXPECT_EQ(*ReadFileToString(fs::path(out_dir) / kMutantsFile), mutants);
  ASSERT_EQ(RunCommand(Cli() + " predict --out " + out_dir + " --sa cmd:" +
                           testing::FakeSaBinary().string(),
                       &out),
            0)
      << out;
  ASSERT_EQ(RunCommand(Cli() + " detect --out " + out_dir, &out), 0) << out;
  ASSERT_EQ(RunCommand(Cli() + " report --out " + out_dir, &out), 0) << out;
  const std::string csv = *ReadFileToString(fs::path(out_dir) / kReportCsvFile);
  EXPECT_EQ(SplitLines(csv).size(), 3u) << csv;
}

TEST(CliTest, StageFailureExitCode) {
  TempDir dir;
  std::ofstream(dir.path() / "c.csv") << testing::SyntheticCorpusCsv(10, 4, false);
  std::string out;
  EXPECT_EQ(RunCommand(Cli() + " run --corpus " + (dir.path() / "c.csv").string() +
                           " --out " + dir.path().string() + " --sa 'cmd:" +
                           testing::FakeSaBinary().string() + " crash'",
                       &out),
            2)
      << out;
  EXPECT_NE(out.find("stage 'predict' failed"), std::string::npos) << out;
  EXPECT_NE(out.find("boom"), std::string::npos) << out;
}

TEST(CliTest, ConfigFileWithFlagOverride) {
  TempDir dir;
  std::ofstream(dir.path() / "c.csv") << testing::SyntheticCorpusCsv(10, 4, false);
  std::ofstream(dir.path() / "run.json")
      << R"({"characteristic":"country","corpus":"c.csv","out":"o","names_per_gender":3})";
  std::string out;
  ASSERT_EQ(RunCommand(Cli() + " templates --config " +
                           (dir.path() / "run.json").string() +
                           " --characteristic gender",
                       &out),
            0)
      << out;
  auto saved = LoadRunConfig(dir.path() / "o" / kConfigFile);
  ASSERT_TRUE(saved.ok()) << saved.status();
  EXPECT_EQ(saved->characteristic, Characteristic::kGender);
  EXPECT_EQ(saved->names_per_gender, 3);

  std::ofstream(dir.path() / "bad.json") << R"({"colour":"red"})";
  EXPECT_EQ(RunCommand(Cli() + " templates --config " +
                           (dir.path() / "bad.json").string(),
                       &out),
            1);
  EXPECT_NE(out.find("unknown key 'colour'"), std::string::npos) << out;
}

TEST(CliTest, EecCommand) {
  TempDir dir;
  std::string out;
  ASSERT_EQ(RunCommand(Cli() + " eec --mode all --noun-phrases --out " +
                           dir.path().string(),
                       &out),
            0)
      << out;
  // 144 expanded templates over 60 names and 12 noun phrases.
  EXPECT_EQ(SplitLines(*ReadFileToString(dir.path() / kMutantsFile)).size(),
            144u * 72u);
}

}  // namespace
}  // namespace fairmt
