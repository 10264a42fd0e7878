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

// Stage orchestration. Every stage reads its inputs from and writes its
// artifacts to the run directory, so any stage can be rerun on its own:
//
//   templates  corpus (+ annotations) -> documents.jsonl, templates.jsonl,
//              rejects.jsonl [, annotations.jsonl]
//   mutants    templates.jsonl -> mutants.jsonl
//   predict    mutants.jsonl -> predictions.jsonl
//   detect     mutants.jsonl + predictions.jsonl -> btcs.jsonl
//   report     all of the above -> report.csv (row appended), report.json
//   eec        -> eec_templates.txt, mutants.jsonl
//
// Each stage also writes the resolved config.json.

#ifndef FAIRMT_PIPELINE_H_
#define FAIRMT_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "fairmt/corpus.h"
#include "fairmt/eec.h"
#include "fairmt/sa_adapter.h"
#include "fairmt/template.h"

namespace fairmt {

inline constexpr std::string_view kDocumentsFile = "documents.jsonl";
inline constexpr std::string_view kAnnotationsFile = "annotations.jsonl";
inline constexpr std::string_view kTemplatesFile = "templates.jsonl";
inline constexpr std::string_view kRejectsFile = "rejects.jsonl";
inline constexpr std::string_view kMutantsFile = "mutants.jsonl";
inline constexpr std::string_view kPredictionsFile = "predictions.jsonl";
inline constexpr std::string_view kBtcsFile = "btcs.jsonl";
inline constexpr std::string_view kEecTemplatesFile = "eec_templates.txt";
inline constexpr std::string_view kReportCsvFile = "report.csv";
inline constexpr std::string_view kReportJsonFile = "report.json";
inline constexpr std::string_view kConfigFile = "config.json";

struct RunConfig {
  Characteristic characteristic = Characteristic::kGender;
  std::filesystem::path corpus;
  CorpusFormat format = CorpusFormat::kCsv;
  size_t max_doc_chars = 10000;
  // Annotation JSONL; the built-in heuristic annotator when unset.
  std::optional<std::filesystem::path> annotations;
  std::filesystem::path resources = FAIRMT_DEFAULT_RESOURCES;
  int names_per_gender = 30;
  std::string name_country = "USA";
  std::string sa = "mock:";
  int batch_size = 64;
  double timeout_seconds = 60;
  int max_in_flight = 4;
  std::optional<size_t> sa_max_chars;
  std::filesystem::path out = "fairmt-out";
  int64_t seed = 0;  // reserved; no stage samples
  EecMode eec_mode = EecMode::kEmotionalOnly;
  bool eec_noun_phrases = false;
  std::string tool = "fairmt";  // report tag; "eec" after the eec stage
};

// JSON object with the RunConfig field names. Relative paths resolve
// against `base_dir`. Unknown keys are an error.
absl::StatusOr<RunConfig> ParseRunConfig(std::string_view json_text,
                                         const std::filesystem::path& base_dir);
absl::StatusOr<RunConfig> LoadRunConfig(const std::filesystem::path& path);
std::string SerializeRunConfig(const RunConfig& cfg);

// The adapter spec with the config's batch and timeout settings applied.
absl::StatusOr<AdapterSpec> ResolveAdapter(const RunConfig& cfg);

enum class Stage { kTemplates, kMutants, kPredict, kDetect, kReport, kEec, kRun };

std::string_view StageName(Stage stage);
std::optional<Stage> ParseStage(std::string_view name);

// Checks that the inputs `stage` needs are present and the settings sane.
absl::Status ValidateRunConfig(const RunConfig& cfg, Stage stage);

// Runs one stage, or templates..report for kRun. Errors are prefixed with
// the failing stage's name.
absl::Status RunStage(Stage stage, const RunConfig& cfg);

struct ReportRow {
  std::string characteristic;
  std::string tool;
  uint64_t templates = 0;
  uint64_t mutants = 0;
  uint64_t btcs = 0;
  std::string adapter;
};

// Counts of the artifacts currently in the run directory.
absl::StatusOr<ReportRow> ComputeReportRow(const RunConfig& cfg);

}  // namespace fairmt

#endif  // FAIRMT_PIPELINE_H_
