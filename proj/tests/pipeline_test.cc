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
#include <set>
#include <string>

#include "fairmt/failure_detection.h"
#include "fairmt/io.h"
#include "fairmt/mutant_engine.h"
#include "fairmt/pipeline.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "test_util.h"

namespace fairmt {
namespace {

namespace fs = std::filesystem;
using ::fairmt::testing::TempDir;
using ::fairmt::testing::UnusedLocalPort;

std::string Read(const fs::path& p) {
  auto s = ReadFileToString(p);
  EXPECT_TRUE(s.ok()) << p;
  return s.ok() ? *s : "";
}

void WriteFile(const fs::path& p, const std::string& s) {
  std::ofstream(p, std::ios::binary) << s;
}

RunConfig SyntheticRun(const TempDir& dir, int docs, Characteristic c) {
  WriteFile(dir.path() / "corpus.csv", testing::SyntheticCorpusCsv(docs, 17, true));
  RunConfig cfg;
  cfg.characteristic = c;
  cfg.corpus = dir.path() / "corpus.csv";
  cfg.out = dir.path() / "out";
  fs::create_directories(cfg.out);
  return cfg;
}

// Every mutant names an existing template, every prediction an existing
// mutant, and every BTC side an existing mutant of its template and class.
void CheckReferentialIntegrity(const fs::path& out) {
  auto templates = ParseTemplatesJsonl(Read(out / kTemplatesFile));
  ASSERT_TRUE(templates.ok()) << templates.status();
  auto mutants = ParseMutantsJsonl(Read(out / kMutantsFile));
  ASSERT_TRUE(mutants.ok()) << mutants.status();
  auto preds = ParsePredictionsJsonl(Read(out / kPredictionsFile));
  ASSERT_TRUE(preds.ok()) << preds.status();
  auto btcs = ParseBtcsJsonl(Read(out / kBtcsFile));
  ASSERT_TRUE(btcs.ok()) << btcs.status();

  std::set<std::string> template_ids;
  for (const Template& t : *templates) template_ids.insert(t.id);
  std::map<std::string, const Mutant*> by_id;
  for (const Mutant& m : *mutants) {
    EXPECT_TRUE(template_ids.contains(m.template_id)) << m.id;
    EXPECT_TRUE(by_id.emplace(m.id, &m).second) << m.id;
  }
  ASSERT_EQ(preds->size(), mutants->size());
  for (size_t i = 0; i < preds->size(); ++i) {
    EXPECT_EQ((*preds)[i].mutant_id, (*mutants)[i].id);
  }
  for (const BiasUncoveringTestCase& b : *btcs) {
    for (const BtcSide* side : {&b.a, &b.b}) {
      auto it = by_id.find(side->id);
      ASSERT_NE(it, by_id.end()) << side->id;
      EXPECT_EQ(it->second->template_id, b.template_id);
      EXPECT_EQ(ClassKey(it->second->class_label), side->class_key);
    }
    EXPECT_NE(b.a.class_key, b.b.class_key);
    EXPECT_NE(b.a.label, b.b.label);
  }
}

TEST(RunConfigTest, ParseResolvesPathsAndRejectsUnknownKeys) {
  auto cfg = ParseRunConfig(
      R"({"characteristic":"occupation","corpus":"data/r.csv","out":"/abs/o",)"
      R"("format":"jsonl","names_per_gender":5,"sa":"mock:","eec_mode":"all"})",
      "/base");
  ASSERT_TRUE(cfg.ok()) << cfg.status();
  EXPECT_EQ(cfg->characteristic, Characteristic::kOccupation);
  EXPECT_EQ(cfg->corpus, fs::path("/base/data/r.csv"));
  EXPECT_EQ(cfg->out, fs::path("/abs/o"));
  EXPECT_EQ(cfg->format, CorpusFormat::kJsonl);
  EXPECT_EQ(cfg->names_per_gender, 5);
  EXPECT_EQ(cfg->eec_mode, EecMode::kAll);

  auto bad = ParseRunConfig(R"({"charactristic":"gender"})", "/");
  ASSERT_FALSE(bad.ok());
  EXPECT_NE(bad.status().message().find("charactristic"), std::string::npos);
  EXPECT_FALSE(ParseRunConfig(R"({"characteristic":"age"})", "/").ok());
  EXPECT_FALSE(ParseRunConfig("[1]", "/").ok());
}

TEST(RunConfigTest, SerializedConfigParsesBack) {
  RunConfig cfg;
  cfg.corpus = "/c.csv";
  cfg.annotations = fs::path("/a.jsonl");
  cfg.sa_max_chars = 512;
  cfg.characteristic = Characteristic::kCountry;
  auto back = ParseRunConfig(SerializeRunConfig(cfg), "/");
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(SerializeRunConfig(*back), SerializeRunConfig(cfg));
}

TEST(PipelineTest, FigureFixturesEndToEnd) {
  TempDir dir;
  RunConfig cfg;
  cfg.corpus = testing::FixtureDir() / "figures.jsonl";
  cfg.format = CorpusFormat::kJsonl;
  cfg.annotations = testing::FixtureDir() / "figures.annotations.jsonl";
  cfg.out = dir.path();
  ASSERT_TRUE(ValidateRunConfig(cfg, Stage::kRun).ok());
  ASSERT_TRUE(RunStage(Stage::kRun, cfg).ok());
  for (auto name : {kDocumentsFile, kTemplatesFile, kRejectsFile, kMutantsFile,
                    kPredictionsFile, kBtcsFile, kReportCsvFile, kReportJsonFile,
                    kConfigFile}) {
    EXPECT_TRUE(fs::exists(dir.path() / name)) << name;
  }
  EXPECT_FALSE(fs::exists(dir.path() / kAnnotationsFile));
  CheckReferentialIntegrity(dir.path());
  auto templates = ParseTemplatesJsonl(Read(dir.path() / kTemplatesFile));
  // fig1, fig5, fig6 and fig8 carry a single person chain; fig2 has two.
  EXPECT_EQ(templates->size(), 4u);
  auto report = nlohmann::json::parse(Read(dir.path() / kReportJsonFile));
  ASSERT_EQ(report["rows"].size(), 1u);
  EXPECT_EQ(report["rows"][0]["templates"], 4);
  EXPECT_EQ(report["rows"][0]["mutants"], 60 * 3 + 2);
  EXPECT_EQ(report["btc_pairs"], "unordered");
}

TEST(PipelineTest, SyntheticCorpusAllCharacteristics) {
  TempDir dir;
  for (Characteristic c : {Characteristic::kGender, Characteristic::kOccupation,
                           Characteristic::kCountry}) {
    RunConfig cfg = SyntheticRun(dir, 20, c);
    ASSERT_TRUE(RunStage(Stage::kRun, cfg).ok());
    CheckReferentialIntegrity(cfg.out);
    EXPECT_TRUE(fs::exists(cfg.out / kAnnotationsFile));
  }
  const std::string csv = Read(dir.path() / "out" / kReportCsvFile);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "characteristic,tool,templates,mutants,btcs,adapter");
  EXPECT_EQ(SplitLines(csv).size(), 4u);
  for (const auto& row : {"gender,fairmt,", "occupation,fairmt,", "country,fairmt,"}) {
    EXPECT_NE(csv.find(row), std::string::npos) << row;
  }
}

TEST(PipelineTest, EmptyCorpus) {
  TempDir dir;
  WriteFile(dir.path() / "empty.csv", "id,text,label\n");
  RunConfig cfg;
  cfg.corpus = dir.path() / "empty.csv";
  cfg.out = dir.path() / "out";
  fs::create_directories(cfg.out);
  ASSERT_TRUE(RunStage(Stage::kRun, cfg).ok());
  for (auto name : {kTemplatesFile, kMutantsFile, kPredictionsFile, kBtcsFile}) {
    EXPECT_EQ(Read(cfg.out / name), "") << name;
  }
  EXPECT_EQ(Read(cfg.out / kReportCsvFile),
            "characteristic,tool,templates,mutants,btcs,adapter\n");
}

TEST(PipelineTest, UnreachableAdapterStopsAtPredict) {
  TempDir dir;
  RunConfig cfg = SyntheticRun(dir, 20, Characteristic::kGender);
  const int port = UnusedLocalPort();
  cfg.sa = "http://127.0.0.1:" + std::to_string(port);
  cfg.timeout_seconds = 2;
  absl::Status s = RunStage(Stage::kRun, cfg);
  ASSERT_FALSE(s.ok());
  EXPECT_NE(s.message().find("stage 'predict' failed"), std::string::npos) << s;
  EXPECT_TRUE(ParseTemplatesJsonl(Read(cfg.out / kTemplatesFile)).ok());
  auto mutants = ParseMutantsJsonl(Read(cfg.out / kMutantsFile));
  ASSERT_TRUE(mutants.ok());
  EXPECT_FALSE(mutants->empty());
  EXPECT_FALSE(fs::exists(cfg.out / kPredictionsFile));
}

TEST(PipelineTest, StagesRerunIndependently) {
  TempDir dir;
  RunConfig cfg = SyntheticRun(dir, 30, Characteristic::kGender);
  ASSERT_TRUE(RunStage(Stage::kRun, cfg).ok());
  const std::string btcs = Read(cfg.out / kBtcsFile);
  fs::remove(cfg.out / kBtcsFile);
  ASSERT_TRUE(RunStage(Stage::kDetect, cfg).ok());
  EXPECT_EQ(Read(cfg.out / kBtcsFile), btcs);

  fs::remove(cfg.out / kPredictionsFile);
  absl::Status s = RunStage(Stage::kDetect, cfg);
  ASSERT_FALSE(s.ok());
  EXPECT_NE(s.message().find("predictions.jsonl"), std::string::npos) << s;
}

TEST(PipelineTest, RejectsAreRecorded) {
  TempDir dir;
  WriteFile(dir.path() / "c.csv",
            "id,text,label\n1,Mary is great and she knows it.,positive\n"
            "2,meh,neutral\n3,Bad \xE2\x9F\xA8name\xE2\x9F\xA9 and he left.,negative\n");
  RunConfig cfg;
  cfg.corpus = dir.path() / "c.csv";
  cfg.out = dir.path();
  ASSERT_TRUE(RunStage(Stage::kTemplates, cfg).ok());
  const std::string rejects = Read(dir.path() / kRejectsFile);
  EXPECT_EQ(SplitLines(rejects).size(), 2u) << rejects;
  EXPECT_NE(rejects.find("binary labels only"), std::string::npos);
}

TEST(PipelineTest, EecStage) {
  TempDir dir;
  RunConfig cfg;
  cfg.out = dir.path();
  cfg.sa = "mock:";
  ASSERT_TRUE(RunStage(Stage::kEec, cfg).ok());
  EXPECT_EQ(SplitLines(Read(dir.path() / kEecTemplatesFile)).size(), 140u);
  EXPECT_EQ(SplitLines(Read(dir.path() / kMutantsFile)).size(), 8400u);
  auto saved = LoadRunConfig(dir.path() / kConfigFile);
  ASSERT_TRUE(saved.ok()) << saved.status();
  EXPECT_EQ(saved->tool, "eec");
  for (Stage s : {Stage::kPredict, Stage::kDetect, Stage::kReport}) {
    ASSERT_TRUE(RunStage(s, *saved).ok()) << StageName(s);
  }
  const std::string csv = Read(dir.path() / kReportCsvFile);
  EXPECT_NE(csv.find("gender,eec,140,8400,"), std::string::npos) << csv;
}

}  // namespace
}  // namespace fairmt
