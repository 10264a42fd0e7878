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

#include "fairmt/failure_detection.h"

#include <algorithm>
#include <unordered_map>

#include "absl/strings/str_cat.h"
#include "fairmt/io.h"
#include "json.hpp"

namespace fairmt {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json SideJson(const BtcSide& s) {
  ordered_json obj;
  obj["id"] = s.id;
  obj["class"] = s.class_key;
  obj["label"] = std::string(LabelName(s.label));
  return obj;
}

absl::StatusOr<BtcSide> ParseSide(const ordered_json& obj) {
  if (!obj.is_object()) return absl::InvalidArgumentError("side is not an object");
  for (const char* key : {"id", "class", "label"}) {
    if (!obj.contains(key) || !obj[key].is_string()) {
      return absl::InvalidArgumentError(
          absl::StrCat("side field '", key, "' must be a string"));
    }
  }
  std::optional<SentimentLabel> label =
      ParseLabel(obj["label"].get<std::string>());
  if (!label.has_value()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "label '", obj["label"].get<std::string>(), "' is not binary"));
  }
  return BtcSide{obj["id"].get<std::string>(), obj["class"].get<std::string>(),
                 *label};
}

}  // namespace

uint64_t CountBtcs(const std::vector<ClassTally>& tallies) {
  // Cross-class pairs with differing labels equal all (positive, negative)
  // pairs minus those inside a single class.
  uint64_t pos = 0;
  uint64_t neg = 0;
  uint64_t same = 0;
  for (const ClassTally& t : tallies) {
    pos += t.positive;
    neg += t.negative;
    same += static_cast<uint64_t>(t.positive) * t.negative;
  }
  return pos * neg - same;
}

absl::StatusOr<DetectionSummary> DetectBtcs(
    const std::vector<Mutant>& mutants, const std::vector<Prediction>& preds,
    const std::function<void(const BiasUncoveringTestCase&)>& sink) {
  std::unordered_map<std::string_view, SentimentLabel> label_of;
  label_of.reserve(preds.size());
  for (const Prediction& p : preds) label_of[p.mutant_id] = p.label;

  struct Member {
    const Mutant* mutant;
    std::string class_key;
    SentimentLabel label;
  };
  std::map<std::string_view, std::vector<Member>> groups;
  for (const Mutant& m : mutants) {
    auto it = label_of.find(m.id);
    if (it == label_of.end()) {
      return absl::FailedPreconditionError(
          absl::StrCat("no prediction for mutant '", m.id, "'"));
    }
    groups[m.template_id].push_back({&m, ClassKey(m.class_label), it->second});
  }

  DetectionSummary summary;
  for (auto& [template_id, members] : groups) {
    std::sort(members.begin(), members.end(),
              [](const Member& x, const Member& y) {
                return x.mutant->id < y.mutant->id;
              });
    auto& tallies = summary.tallies[std::string(template_id)];
    for (const Member& m : members) {
      ClassTally& t = tallies[m.class_key];
      (m.label == SentimentLabel::kPositive ? t.positive : t.negative) += 1;
    }
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        const Member& x = members[i];
        const Member& y = members[j];
        if (x.label == y.label || x.class_key == y.class_key) continue;
        ++summary.btcs;
        if (sink) {
          sink({std::string(template_id),
                {x.mutant->id, x.class_key, x.label},
                {y.mutant->id, y.class_key, y.label}});
        }
      }
    }
  }
  return summary;
}

absl::StatusOr<std::vector<BiasUncoveringTestCase>> DetectBtcs(
    const std::vector<Mutant>& mutants, const std::vector<Prediction>& preds) {
  std::vector<BiasUncoveringTestCase> out;
  absl::StatusOr<DetectionSummary> summary = DetectBtcs(
      mutants, preds,
      [&](const BiasUncoveringTestCase& btc) { out.push_back(btc); });
  if (!summary.ok()) return summary.status();
  return out;
}

std::string SerializeBtc(const BiasUncoveringTestCase& btc) {
  ordered_json obj;
  obj["template_id"] = btc.template_id;
  obj["a"] = SideJson(btc.a);
  obj["b"] = SideJson(btc.b);
  return obj.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

absl::StatusOr<std::vector<BiasUncoveringTestCase>> ParseBtcsJsonl(
    std::string_view bytes) {
  std::vector<BiasUncoveringTestCase> out;
  for (const NumberedLine& line : SplitLines(bytes)) {
    ordered_json obj = ordered_json::parse(line.text, nullptr, false);
    if (obj.is_discarded() || !obj.is_object() || !obj.contains("template_id") ||
        !obj["template_id"].is_string() || !obj.contains("a") ||
        !obj.contains("b")) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line.line, ": expected {template_id, a, b}"));
    }
    absl::StatusOr<BtcSide> a = ParseSide(obj["a"]);
    absl::StatusOr<BtcSide> b = ParseSide(obj["b"]);
    if (!a.ok() || !b.ok()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line.line, ": ",
          std::string((a.ok() ? b.status() : a.status()).message())));
    }
    out.push_back({obj["template_id"].get<std::string>(), *a, *b});
  }
  return out;
}

std::string SerializePrediction(const Prediction& p) {
  ordered_json obj;
  obj["id"] = p.mutant_id;
  obj["label"] = std::string(LabelName(p.label));
  return obj.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

absl::StatusOr<std::vector<Prediction>> ParsePredictionsJsonl(
    std::string_view bytes) {
  std::vector<Prediction> out;
  for (const NumberedLine& line : SplitLines(bytes)) {
    ordered_json obj = ordered_json::parse(line.text, nullptr, false);
    if (obj.is_discarded() || !obj.is_object() || !obj.contains("id") ||
        !obj["id"].is_string() || !obj.contains("label") ||
        !obj["label"].is_string()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line.line, ": expected {\"id\",\"label\"}"));
    }
    std::optional<SentimentLabel> label =
        ParseLabel(obj["label"].get<std::string>());
    if (!label.has_value()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line.line, ": label '",
                       obj["label"].get<std::string>(), "' is not binary"));
    }
    out.push_back({obj["id"].get<std::string>(), *label});
  }
  return out;
}

}  // namespace fairmt
