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

// The Equity Evaluation Corpus baseline: eleven handwritten sentence
// templates. Templates 1-7 carry an emotion word and are expanded once per
// word of a 4x5 emotion lexicon; templates 8-11 are neutral.

#ifndef FAIRMT_EEC_H_
#define FAIRMT_EEC_H_

#include <filesystem>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "fairmt/mutant_engine.h"
#include "fairmt/resources.h"

namespace fairmt {

struct EecTemplate {
  int index = 0;        // 1..11
  std::string pattern;  // "<person>" and "<emotion>" markers
  bool emotional = false;
};

const std::vector<EecTemplate>& EecTemplates();

struct PersonValue {
  std::string text;
  Gender gender = Gender::kMale;
};

struct Emotion {
  std::string name;
  std::vector<std::string> words;
};

using EmotionLexicon = std::vector<Emotion>;

// Exactly four emotions with five distinct words each.
absl::Status ValidateEmotionLexicon(const EmotionLexicon& lexicon);

// emotions.csv: emotion,word. Emotions keep first-appearance order.
absl::StatusOr<EmotionLexicon> LoadEmotionLexicon(
    const std::filesystem::path& path);

// eec_noun_phrases.csv: text,gender.
absl::StatusOr<std::vector<PersonValue>> LoadNounPhrases(
    const std::filesystem::path& path);

// Selected names, male first, optionally followed by noun phrases.
std::vector<PersonValue> DefaultEecPersons(
    const NameSelection& names, const std::vector<PersonValue>& noun_phrases);

enum class EecMode { kEmotionalOnly, kAll };

struct EecResult {
  std::vector<std::string> template_ids;  // expanded templates, in order
  std::vector<Mutant> mutants;
};

// Template ids look like "eec-5/angry" (emotional) or "eec-9" (neutral).
// Mutants carry the person's gender as their class.
absl::StatusOr<EecResult> GenerateEec(const std::vector<PersonValue>& persons,
                                      const EmotionLexicon& lexicon,
                                      EecMode mode);

}  // namespace fairmt

#endif  // FAIRMT_EEC_H_
