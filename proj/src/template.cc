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

#include "fairmt/template.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "fairmt/io.h"
#include "fairmt/utf8.h"
#include "json.hpp"

namespace fairmt {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kOpenTag = "\xE2\x9F\xA8";   // U+27E8
constexpr std::string_view kCloseTag = "\xE2\x9F\xA9";  // U+27E9

bool AllowedIn(Characteristic c, SlotKind k) {
  switch (c) {
    case Characteristic::kGender:
      return k == SlotKind::kName || k == SlotKind::kPronoun ||
             k == SlotKind::kGenderNoun;
    case Characteristic::kOccupation:
      return k == SlotKind::kOccupation || k == SlotKind::kDet;
    case Characteristic::kCountry:
      return k == SlotKind::kMalePerson || k == SlotKind::kFemalePerson;
  }
  return false;
}

absl::Status LineError(int line, const std::string& what) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", what));
}

}  // namespace

std::string_view CharacteristicName(Characteristic c) {
  switch (c) {
    case Characteristic::kGender:
      return "gender";
    case Characteristic::kOccupation:
      return "occupation";
    case Characteristic::kCountry:
      return "country";
  }
  return "?";
}

std::optional<Characteristic> ParseCharacteristic(std::string_view name) {
  const std::string lower = AsciiLower(name);
  if (lower == "gender") return Characteristic::kGender;
  if (lower == "occupation") return Characteristic::kOccupation;
  if (lower == "country") return Characteristic::kCountry;
  return std::nullopt;
}

std::string PlaceholderName(PlaceholderKind kind) {
  switch (kind.kind) {
    case SlotKind::kName:
      return "name";
    case SlotKind::kPronoun:
      return absl::StrCat("pro-", std::string(PronounIdName(kind.pronoun)));
    case SlotKind::kGenderNoun:
      return "gaw";
    case SlotKind::kOccupation:
      return "occupation";
    case SlotKind::kDet:
      return "det";
    case SlotKind::kMalePerson:
      return "male";
    case SlotKind::kFemalePerson:
      return "female";
  }
  return "?";
}

std::optional<PlaceholderKind> ParsePlaceholderName(std::string_view name) {
  if (name == "name") return PlaceholderKind{SlotKind::kName};
  if (name == "gaw") return PlaceholderKind{SlotKind::kGenderNoun};
  if (name == "occupation") return PlaceholderKind{SlotKind::kOccupation};
  if (name == "det") return PlaceholderKind{SlotKind::kDet};
  if (name == "male") return PlaceholderKind{SlotKind::kMalePerson};
  if (name == "female") return PlaceholderKind{SlotKind::kFemalePerson};
  if (name.starts_with("pro-")) {
    std::optional<PronounId> id = ParsePronounId(name.substr(4));
    if (id.has_value()) return PlaceholderKind{SlotKind::kPronoun, *id};
  }
  return std::nullopt;
}

std::string PlaceholderTag(PlaceholderKind kind) {
  return absl::StrCat(std::string(kOpenTag), PlaceholderName(kind),
                      std::string(kCloseTag));
}

std::vector<const Slot*> Template::Slots() const {
  std::vector<const Slot*> out;
  for (const Segment& s : segments) {
    if (const Slot* slot = std::get_if<Slot>(&s)) out.push_back(slot);
  }
  return out;
}

bool Template::HasSlot(SlotKind kind) const {
  for (const Slot* s : Slots()) {
    if (s->kind.kind == kind) return true;
  }
  return false;
}

std::string RenderTemplate(const Template& t) {
  std::string out;
  for (const Segment& s : t.segments) {
    if (const Literal* lit = std::get_if<Literal>(&s)) {
      out += lit->text;
    } else {
      out += PlaceholderTag(std::get<Slot>(s).kind);
    }
  }
  return out;
}

std::string Reconstruct(const Template& t) {
  std::string out;
  for (const Segment& s : t.segments) {
    if (const Literal* lit = std::get_if<Literal>(&s)) {
      out += lit->text;
    } else {
      out += std::get<Slot>(s).original_surface;
    }
  }
  return out;
}

absl::Status ValidateTemplate(const Template& t) {
  int slots = 0;
  bool previous_literal = false;
  bool male = false;
  bool female = false;
  size_t offset = 0;
  for (size_t i = 0; i < t.segments.size(); ++i) {
    const Segment& seg = t.segments[i];
    if (const Literal* lit = std::get_if<Literal>(&seg)) {
      if (lit->text.empty()) {
        return absl::InvalidArgumentError(
            absl::StrCat("segment ", i, ": empty literal"));
      }
      if (previous_literal) {
        return absl::InvalidArgumentError(
            absl::StrCat("segment ", i, ": adjacent literals"));
      }
      if (lit->text.find(kOpenTag) != std::string::npos ||
          lit->text.find(kCloseTag) != std::string::npos) {
        return absl::InvalidArgumentError(
            absl::StrCat("segment ", i, ": literal contains a placeholder bracket"));
      }
      previous_literal = true;
      offset += CodePointCount(lit->text);
      continue;
    }
    const Slot& slot = std::get<Slot>(seg);
    previous_literal = false;
    ++slots;
    if (!AllowedIn(t.characteristic, slot.kind.kind)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "segment ", i, ": slot '", PlaceholderName(slot.kind),
          "' not allowed in a ", std::string(CharacteristicName(t.characteristic)),
          " template"));
    }
    male = male || slot.kind.kind == SlotKind::kMalePerson;
    female = female || slot.kind.kind == SlotKind::kFemalePerson;
    if (slot.original_surface.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("segment ", i, ": slot has an empty original surface"));
    }
    if (slot.position != static_cast<int>(offset)) {
      return absl::InvalidArgumentError(
          absl::StrCat("segment ", i, ": slot position ", slot.position,
                       " but reconstruction puts it at ", offset));
    }
    offset += CodePointCount(slot.original_surface);
  }
  if (slots == 0) {
    return absl::InvalidArgumentError("template has no slots");
  }
  if (male && female) {
    return absl::InvalidArgumentError(
        "country template mixes male and female slots");
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<Segment>> BuildSegments(
    std::string_view text, std::vector<Replacement> replacements) {
  std::sort(replacements.begin(), replacements.end(),
            [](const Replacement& a, const Replacement& b) {
              return a.begin < b.begin;
            });
  std::vector<Segment> out;
  size_t cursor = 0;
  int cp_offset = 0;
  for (const Replacement& r : replacements) {
    if (r.begin >= r.end || r.end > text.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("replacement [", r.begin, ",", r.end, ") out of range"));
    }
    if (r.begin < cursor) {
      return absl::InvalidArgumentError(
          absl::StrCat("overlapping replacements at byte ", r.begin));
    }
    if (r.begin > cursor) {
      std::string_view lit = text.substr(cursor, r.begin - cursor);
      out.push_back(Literal{std::string(lit)});
      cp_offset += static_cast<int>(CodePointCount(lit));
    }
    std::string_view surface = text.substr(r.begin, r.end - r.begin);
    out.push_back(Slot{r.kind, std::string(surface), cp_offset,
                       StartsWithAsciiUpper(surface)});
    cp_offset += static_cast<int>(CodePointCount(surface));
    cursor = r.end;
  }
  if (cursor < text.size()) {
    out.push_back(Literal{std::string(text.substr(cursor))});
  }
  return out;
}

std::string SerializeTemplate(const Template& t) {
  ordered_json obj;
  obj["id"] = t.id;
  obj["source_doc"] = t.source_doc;
  obj["characteristic"] = std::string(CharacteristicName(t.characteristic));
  ordered_json segs = ordered_json::array();
  for (const Segment& s : t.segments) {
    ordered_json seg;
    if (const Literal* lit = std::get_if<Literal>(&s)) {
      seg["lit"] = lit->text;
    } else {
      const Slot& slot = std::get<Slot>(s);
      seg["slot"] = PlaceholderName(slot.kind);
      seg["orig"] = slot.original_surface;
      seg["cap"] = slot.capitalized;
    }
    segs.push_back(std::move(seg));
  }
  obj["segments"] = std::move(segs);
  return obj.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

absl::StatusOr<Template> ParseTemplate(std::string_view line) {
  ordered_json obj = ordered_json::parse(line, nullptr, false);
  if (obj.is_discarded() || !obj.is_object()) {
    return absl::InvalidArgumentError("not a JSON object");
  }
  auto str = [&](const ordered_json& o, const char* key) -> const std::string* {
    auto it = o.find(key);
    if (it == o.end() || !it->is_string()) return nullptr;
    return it->get_ptr<const std::string*>();
  };
  Template t;
  const std::string* id = str(obj, "id");
  const std::string* doc = str(obj, "source_doc");
  const std::string* ch = str(obj, "characteristic");
  if (id == nullptr || doc == nullptr || ch == nullptr) {
    return absl::InvalidArgumentError(
        "id, source_doc and characteristic must be strings");
  }
  t.id = *id;
  t.source_doc = *doc;
  std::optional<Characteristic> c = ParseCharacteristic(*ch);
  if (!c.has_value()) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown characteristic '", *ch, "'"));
  }
  t.characteristic = *c;
  auto segs = obj.find("segments");
  if (segs == obj.end() || !segs->is_array()) {
    return absl::InvalidArgumentError("segments must be an array");
  }
  int offset = 0;
  for (size_t i = 0; i < segs->size(); ++i) {
    const ordered_json& seg = (*segs)[i];
    if (!seg.is_object()) {
      return absl::InvalidArgumentError(
          absl::StrCat("segments[", i, "]: not an object"));
    }
    if (const std::string* lit = str(seg, "lit")) {
      t.segments.push_back(Literal{*lit});
      offset += static_cast<int>(CodePointCount(*lit));
      continue;
    }
    const std::string* name = str(seg, "slot");
    const std::string* orig = str(seg, "orig");
    auto cap = seg.find("cap");
    if (name == nullptr || orig == nullptr || cap == seg.end() ||
        !cap->is_boolean()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "segments[", i, "]: expected {\"lit\"} or {\"slot\",\"orig\",\"cap\"}"));
    }
    std::optional<PlaceholderKind> kind = ParsePlaceholderName(*name);
    if (!kind.has_value()) {
      return absl::InvalidArgumentError(
          absl::StrCat("segments[", i, "]: unknown slot '", *name, "'"));
    }
    t.segments.push_back(Slot{*kind, *orig, offset, cap->get<bool>()});
    offset += static_cast<int>(CodePointCount(*orig));
  }
  if (absl::Status s = ValidateTemplate(t); !s.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat("template '", t.id, "': ", std::string(s.message())));
  }
  return t;
}

std::string TemplatesToJsonl(const std::vector<Template>& templates) {
  std::string out;
  for (const Template& t : templates) {
    out += SerializeTemplate(t);
    out += '\n';
  }
  return out;
}

absl::StatusOr<std::vector<Template>> ParseTemplatesJsonl(
    std::string_view bytes) {
  std::vector<Template> out;
  for (const NumberedLine& line : SplitLines(bytes)) {
    absl::StatusOr<Template> t = ParseTemplate(line.text);
    if (!t.ok()) return LineError(line.line, std::string(t.status().message()));
    out.push_back(*std::move(t));
  }
  return out;
}

}  // namespace fairmt
