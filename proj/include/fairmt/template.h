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

// Templates: a source text cut into literals and typed placeholder slots.
//
// JSONL form, one template per line:
//
//   {"id": str, "source_doc": str, "characteristic": "gender"|...,
//    "segments": [{"lit": str} | {"slot": "pro-spp", "orig": str, "cap": bool}]}

#ifndef FAIRMT_TEMPLATE_H_
#define FAIRMT_TEMPLATE_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "fairmt/resources.h"

namespace fairmt {

enum class Characteristic { kGender, kOccupation, kCountry };

std::string_view CharacteristicName(Characteristic c);
std::optional<Characteristic> ParseCharacteristic(std::string_view name);

enum class SlotKind {
  kName,
  kPronoun,
  kGenderNoun,
  kOccupation,
  kDet,
  kMalePerson,
  kFemalePerson,
};

struct PlaceholderKind {
  SlotKind kind = SlotKind::kName;
  PronounId pronoun = PronounId::kSpp;  // meaningful for kPronoun only

  friend bool operator==(const PlaceholderKind& a, const PlaceholderKind& b) {
    return a.kind == b.kind &&
           (a.kind != SlotKind::kPronoun || a.pronoun == b.pronoun);
  }
};

// "name", "pro-spp", "gaw", "occupation", "det", "male", "female".
std::string PlaceholderName(PlaceholderKind kind);
std::optional<PlaceholderKind> ParsePlaceholderName(std::string_view name);
// The display tag, e.g. "⟨pro-spp⟩".
std::string PlaceholderTag(PlaceholderKind kind);

struct Literal {
  std::string text;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Slot {
  PlaceholderKind kind;
  std::string original_surface;
  int position = 0;  // code-point offset of the slot in the source text
  bool capitalized = false;
  friend bool operator==(const Slot&, const Slot&) = default;
};

using Segment = std::variant<Literal, Slot>;

struct Template {
  std::string id;
  std::string source_doc;
  Characteristic characteristic = Characteristic::kGender;
  std::vector<Segment> segments;

  std::vector<const Slot*> Slots() const;
  bool HasSlot(SlotKind kind) const;
};

// Literals verbatim, slots as their tags.
std::string RenderTemplate(const Template& t);

// Literals verbatim, slots as their original surfaces. Equals the cleaned
// source text for every valid template.
std::string Reconstruct(const Template& t);

// Checks segment shape (no empty or adjacent literals, no bracket characters
// in literals, at least one slot), the per-characteristic slot kinds, and
// that slot positions agree with the reconstructed text.
absl::Status ValidateTemplate(const Template& t);

// One span of source text to turn into a slot. Byte offsets, [begin, end).
struct Replacement {
  size_t begin = 0;
  size_t end = 0;
  PlaceholderKind kind;
};

// Cuts `text` at the replacements. Overlapping replacements are an error.
// Slot positions and capitalization flags are derived from `text`.
absl::StatusOr<std::vector<Segment>> BuildSegments(
    std::string_view text, std::vector<Replacement> replacements);

// Single-line JSON, no trailing newline.
std::string SerializeTemplate(const Template& t);
absl::StatusOr<Template> ParseTemplate(std::string_view line);

std::string TemplatesToJsonl(const std::vector<Template>& templates);
absl::StatusOr<std::vector<Template>> ParseTemplatesJsonl(std::string_view bytes);

}  // namespace fairmt

#endif  // FAIRMT_TEMPLATE_H_
