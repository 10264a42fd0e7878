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

// fairmt: metamorphic fairness testing for sentiment analysis systems.
//
//   fairmt run --characteristic gender --corpus reviews.csv --sa mock: --out run1
//   fairmt eec --out eec1 --mode all
//
// Exit status: 0 on success, 1 for a bad command line or config, 2 when a
// stage fails.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fairmt/pipeline.h"

namespace {

namespace fs = std::filesystem;

constexpr int kConfigError = 1;
constexpr int kStageError = 2;

struct Flags {
  std::string config;
  std::string characteristic;
  std::string corpus;
  std::string format;
  std::string annotations;
  std::string resources;
  std::optional<int> names_per_gender;
  std::string name_country;
  std::string sa;
  std::optional<int> batch_size;
  std::optional<double> timeout;
  std::optional<int> max_in_flight;
  std::optional<size_t> sa_max_chars;
  std::optional<size_t> max_doc_chars;
  std::string out;
  std::string mode;
  bool noun_phrases = false;
};

void AddFlags(CLI::App* cmd, Flags& f, fairmt::Stage stage) {
  using fairmt::Stage;
  cmd->add_option("--config", f.config, "JSON run config; flags override it");
  cmd->add_option("--out", f.out, "run directory (default fairmt-out)");
  cmd->add_option("--resources", f.resources, "resource directory");
  cmd->add_option("--names-per-gender", f.names_per_gender,
                  "names per gender for name slots (default 30)");
  cmd->add_option("--name-country", f.name_country,
                  "country whose names fill name slots (default USA)");
  if (stage == Stage::kTemplates || stage == Stage::kRun) {
    cmd->add_option("--characteristic", f.characteristic,
                    "gender, occupation or country")
        ->check(CLI::IsMember({"gender", "occupation", "country"}));
    cmd->add_option("--corpus", f.corpus, "input corpus");
    cmd->add_option("--format", f.format, "csv or jsonl (default csv)")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    cmd->add_option("--annotations", f.annotations,
                    "annotation JSONL; the heuristic annotator when omitted");
    cmd->add_option("--max-doc-chars", f.max_doc_chars,
                    "document length cap in code points (default 10000)");
  }
  if (stage == Stage::kPredict || stage == Stage::kRun) {
    cmd->add_option("--sa", f.sa,
                    "classifier: cmd:<command>, http:<url> or mock:[config]");
    cmd->add_option("--batch-size", f.batch_size, "texts per request");
    cmd->add_option("--timeout", f.timeout, "seconds per batch");
    cmd->add_option("--max-in-flight", f.max_in_flight,
                    "concurrent HTTP requests");
    cmd->add_option("--sa-max-chars", f.sa_max_chars,
                    "truncate texts sent to the classifier");
  }
  if (stage == Stage::kEec) {
    cmd->add_option("--mode", f.mode, "emotional (default) or all")
        ->check(CLI::IsMember({"emotional", "all"}));
    cmd->add_flag("--noun-phrases", f.noun_phrases,
                  "add the gendered noun phrases to the person values");
  }
}

// Config precedence: built-in defaults, then --config (or the run
// directory's config.json for the later stages), then flags.
absl::StatusOr<fairmt::RunConfig> BuildConfig(const Flags& f,
                                              fairmt::Stage stage) {
  using fairmt::Stage;
  fairmt::RunConfig cfg;
  std::optional<fs::path> config_path;
  if (!f.config.empty()) {
    config_path = f.config;
  } else if (stage != Stage::kTemplates && stage != Stage::kRun &&
             stage != Stage::kEec) {
    fs::path candidate =
        fs::path(f.out.empty() ? cfg.out : fs::path(f.out)) / fairmt::kConfigFile;
    if (fs::exists(candidate)) config_path = candidate;
  }
  if (config_path.has_value()) {
    absl::StatusOr<fairmt::RunConfig> loaded = fairmt::LoadRunConfig(*config_path);
    if (!loaded.ok()) return loaded.status();
    cfg = *std::move(loaded);
  }
  if (!f.characteristic.empty()) {
    cfg.characteristic = *fairmt::ParseCharacteristic(f.characteristic);
  }
  if (!f.corpus.empty()) cfg.corpus = f.corpus;
  if (!f.format.empty()) {
    absl::StatusOr<fairmt::CorpusFormat> format =
        fairmt::ParseCorpusFormat(f.format);
    if (!format.ok()) return format.status();
    cfg.format = *format;
  }
  if (!f.annotations.empty()) cfg.annotations = fs::path(f.annotations);
  if (!f.resources.empty()) cfg.resources = f.resources;
  if (f.names_per_gender) cfg.names_per_gender = *f.names_per_gender;
  if (!f.name_country.empty()) cfg.name_country = f.name_country;
  if (!f.sa.empty()) cfg.sa = f.sa;
  if (f.batch_size) cfg.batch_size = *f.batch_size;
  if (f.timeout) cfg.timeout_seconds = *f.timeout;
  if (f.max_in_flight) cfg.max_in_flight = *f.max_in_flight;
  if (f.sa_max_chars) cfg.sa_max_chars = *f.sa_max_chars;
  if (f.max_doc_chars) cfg.max_doc_chars = *f.max_doc_chars;
  if (!f.out.empty()) cfg.out = f.out;
  if (f.mode == "all") cfg.eec_mode = fairmt::EecMode::kAll;
  if (f.mode == "emotional") cfg.eec_mode = fairmt::EecMode::kEmotionalOnly;
  if (f.noun_phrases) cfg.eec_noun_phrases = true;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  using fairmt::Stage;
  CLI::App app{"Metamorphic fairness testing for sentiment analysis systems"};
  app.require_subcommand(1);
  Flags flags;
  std::optional<Stage> chosen;
  const std::pair<Stage, const char*> commands[] = {
      {Stage::kTemplates, "extract characteristic templates from a corpus"},
      {Stage::kMutants, "instantiate templates into mutants"},
      {Stage::kPredict, "label every mutant with the classifier"},
      {Stage::kDetect, "find bias-uncovering test cases"},
      {Stage::kReport, "append a summary row to report.csv"},
      {Stage::kEec, "generate the Equity Evaluation Corpus baseline"},
      {Stage::kRun, "templates, mutants, predict, detect and report"},
  };
  for (const auto& [stage, help] : commands) {
    CLI::App* cmd =
        app.add_subcommand(std::string(fairmt::StageName(stage)), help);
    AddFlags(cmd, flags, stage);
    cmd->callback([&chosen, s = stage] { chosen = s; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }

  absl::StatusOr<fairmt::RunConfig> cfg = BuildConfig(flags, *chosen);
  if (!cfg.ok()) {
    std::cerr << "fairmt: " << cfg.status().message() << "\n";
    return kConfigError;
  }
  if (absl::Status s = fairmt::ValidateRunConfig(*cfg, *chosen); !s.ok()) {
    std::cerr << "fairmt: " << s.message() << "\n";
    return kConfigError;
  }
  std::error_code ec;
  fs::create_directories(cfg->out, ec);
  if (ec) {
    std::cerr << "fairmt: cannot create " << cfg->out << ": " << ec.message()
              << "\n";
    return kConfigError;
  }
  if (absl::Status s = fairmt::RunStage(*chosen, *cfg); !s.ok()) {
    std::cerr << "fairmt: " << s.message() << "\n";
    return kStageError;
  }
  return 0;
}
