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

// Runs a sentiment classifier over mutant texts.
//
// Subprocess protocol: the child reads {"id","text"} lines on stdin and
// answers each with an {"id","label"} line on stdout. One child serves the
// whole run, one batch at a time.
//
// HTTP protocol: POST <url>/predict with {"texts":[...]} answered by
// {"labels":[...]} in the same order.
//
// Labels are "positive" or "negative", any case. Texts are sent NFC
// normalized.

#ifndef FAIRMT_SA_ADAPTER_H_
#define FAIRMT_SA_ADAPTER_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "fairmt/corpus.h"
#include "fairmt/failure_detection.h"
#include "fairmt/mutant_engine.h"
#include "fairmt/resources.h"

namespace fairmt {

struct MockBiasRule {
  std::set<std::string> triggers;  // lower-case words
  int delta = 0;
};

// A lexicon classifier with injectable bias. With normalize_protected set,
// every protected word (names, pronouns, gender nouns, occupations, country
// names, and the determiners a/an) is left out of the lexicon score, so
// mutants of one template agree unless a bias rule fires. Bias rules see the
// raw tokens.
struct MockConfig {
  std::set<std::string> positive;
  std::set<std::string> negative;
  std::vector<MockBiasRule> bias_rules;
  bool normalize_protected = false;
};

MockConfig DefaultMockConfig();

// {"positive":[str], "negative":[str],
//  "bias_rules":[{"triggers":[str], "delta":int}], "normalize_protected":bool}
// Missing lexicons fall back to the defaults.
absl::StatusOr<MockConfig> ParseMockConfig(std::string_view json_text);
absl::Status ValidateMockConfig(const MockConfig& cfg);

// Lower-cased word tokens as the mock sees them.
std::vector<std::string> MockTokens(std::string_view text);

// score = #positive - #negative + sum of fired rule deltas; a rule fires
// when any trigger appears. Positive iff score >= 0.
SentimentLabel MockClassify(std::string_view text, const MockConfig& cfg,
                            const ResourceBundle& bundle);

struct SubprocessSpec {
  std::string command;  // run through /bin/sh -c
  int batch_size = 64;
  double timeout_seconds = 60;
};

struct HttpSpec {
  std::string url;  // http://host[:port][/base]
  int batch_size = 64;
  double timeout_seconds = 60;
  int max_in_flight = 4;
};

struct MockSpec {
  MockConfig config;
  std::string config_path;  // empty for the built-in config
};

struct AdapterSpec {
  std::variant<SubprocessSpec, HttpSpec, MockSpec> kind;
  // Texts longer than this many code points are cut and reported.
  std::optional<size_t> max_chars;
};

// "cmd:<command line>", "http:<url>" or "mock:[config.json]".
absl::StatusOr<AdapterSpec> ParseAdapterSpec(std::string_view text);
absl::Status ValidateAdapterSpec(const AdapterSpec& spec);

// Short label for reports: "mock", "cmd:<command>" or "http:<url>".
std::string AdapterName(const AdapterSpec& spec);

std::string NormalizeNfc(std::string_view text);

struct PredictStats {
  std::vector<std::string> truncated_ids;
  int retries = 0;
};

// One prediction per mutant, in input order. A failed batch is retried
// once; a response that does not cover the batch exactly fails it whole.
absl::StatusOr<std::vector<Prediction>> PredictBatch(
    const AdapterSpec& spec, const std::vector<Mutant>& mutants,
    const ResourceBundle& bundle, PredictStats* stats = nullptr);

}  // namespace fairmt

#endif  // FAIRMT_SA_ADAPTER_H_
