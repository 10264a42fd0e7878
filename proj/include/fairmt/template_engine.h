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

// Turns annotated documents into gender, occupation and country templates.
//
// Each generator returns an error for a malformed document (overlapping
// replacements, a mention crossing a sentence boundary, text that already
// contains placeholder brackets), nullopt when the document yields no
// template, and the template otherwise.

#ifndef FAIRMT_TEMPLATE_ENGINE_H_
#define FAIRMT_TEMPLATE_ENGINE_H_

#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "fairmt/annotation.h"
#include "fairmt/corpus.h"
#include "fairmt/resources.h"
#include "fairmt/template.h"

namespace fairmt {

struct MentionKind {
  enum class Type { kPersonName, kGenderPronoun, kGenderNounPhrase, kNotPerson };

  Type type = Type::kNotPerson;
  Gender gender = Gender::kMale;        // pronoun and gender-noun kinds
  PronounId pronoun = PronounId::kSpp;  // pronoun kind
  int root_token = -1;                  // gender-noun kind

  bool IsPerson() const { return type != Type::kNotPerson; }
};

// Checked in order: Person entity span, gender pronoun, gender-noun root.
MentionKind ClassifyMention(const Mention& mention, const Annotation& ann,
                            const ResourceBundle& res);

// The single chain that refers to a person, provided every mention in it is
// a person reference. nullopt otherwise.
std::optional<CorefChain> FilterCorefs(const std::vector<CorefChain>& chains,
                                       const Annotation& ann,
                                       const ResourceBundle& res);

enum class InferredGender { kMale, kFemale, kInconclusive };

// Male or female when the chain has gender pronouns and they all agree.
InferredGender InferGender(const CorefChain& chain, const Annotation& ann,
                           const ResourceBundle& res);

// `ann` must describe `doc`; an unbound annotation is bound on a copy.
absl::StatusOr<std::optional<Template>> GenerateGenderTemplate(
    const Document& doc, const Annotation& ann, const ResourceBundle& res);
absl::StatusOr<std::optional<Template>> GenerateOccupationTemplate(
    const Document& doc, const Annotation& ann, const ResourceBundle& res);
absl::StatusOr<std::optional<Template>> GenerateCountryTemplate(
    const Document& doc, const Annotation& ann, const ResourceBundle& res);

absl::StatusOr<std::optional<Template>> GenerateTemplate(
    Characteristic characteristic, const Document& doc, const Annotation& ann,
    const ResourceBundle& res);

}  // namespace fairmt

#endif  // FAIRMT_TEMPLATE_ENGINE_H_
