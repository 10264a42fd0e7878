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

// Pairs predictions into bias-uncovering test cases (BTCs): two mutants of
// one template whose classes differ and whose predicted labels differ.
// Pairs are unordered and stored with the smaller mutant id first.
//
// BTC JSONL form:
//
//   {"template_id": str,
//    "a": {"id": str, "class": str, "label": "positive"|"negative"},
//    "b": {...}}

#ifndef FAIRMT_FAILURE_DETECTION_H_
#define FAIRMT_FAILURE_DETECTION_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "fairmt/corpus.h"
#include "fairmt/mutant_engine.h"

namespace fairmt {

struct Prediction {
  std::string mutant_id;
  SentimentLabel label = SentimentLabel::kPositive;
  friend bool operator==(const Prediction&, const Prediction&) = default;
};

struct BtcSide {
  std::string id;
  std::string class_key;
  SentimentLabel label = SentimentLabel::kPositive;
  friend bool operator==(const BtcSide&, const BtcSide&) = default;
};

struct BiasUncoveringTestCase {
  std::string template_id;
  BtcSide a;
  BtcSide b;
  friend bool operator==(const BiasUncoveringTestCase&,
                         const BiasUncoveringTestCase&) = default;
};

struct ClassTally {
  int64_t positive = 0;
  int64_t negative = 0;
};

// Sum over unordered class pairs (c, c') of |c+|*|c'-| + |c-|*|c'+|.
uint64_t CountBtcs(const std::vector<ClassTally>& tallies);

struct DetectionSummary {
  uint64_t btcs = 0;
  // template id -> class key -> tally
  std::map<std::string, std::map<std::string, ClassTally>> tallies;
};

// Streams every BTC to `sink` in canonical order: templates by id, then
// pairs by (a.id, b.id). A mutant without a prediction is an error.
absl::StatusOr<DetectionSummary> DetectBtcs(
    const std::vector<Mutant>& mutants, const std::vector<Prediction>& preds,
    const std::function<void(const BiasUncoveringTestCase&)>& sink);

absl::StatusOr<std::vector<BiasUncoveringTestCase>> DetectBtcs(
    const std::vector<Mutant>& mutants, const std::vector<Prediction>& preds);

std::string SerializeBtc(const BiasUncoveringTestCase& btc);
absl::StatusOr<std::vector<BiasUncoveringTestCase>> ParseBtcsJsonl(
    std::string_view bytes);

std::string SerializePrediction(const Prediction& p);
absl::StatusOr<std::vector<Prediction>> ParsePredictionsJsonl(
    std::string_view bytes);

}  // namespace fairmt

#endif  // FAIRMT_FAILURE_DETECTION_H_
