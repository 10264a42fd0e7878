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

#include "fairmt/mutant_engine.h"

#include "absl/strings/str_cat.h"
#include "fairmt/io.h"
#include "fairmt/utf8.h"
#include "json.hpp"

namespace fairmt {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string GenderFill(const ResourceBundle& bundle, const Slot& slot,
                       Gender g, const std::string& name) {
  switch (slot.kind.kind) {
    case SlotKind::kName:
      return name;
    case SlotKind::kPronoun:
      return bundle.Pronoun(g, slot.kind.pronoun);
    case SlotKind::kGenderNoun: {
      const GenderNounPair* pair =
          bundle.FindGenderNoun(AsciiLower(slot.original_surface));
      if (pair == nullptr) pair = &bundle.gender_nouns.front();
      return pair->ForGender(g);
    }
    default:
      return slot.original_surface;
  }
}

ordered_json ClassJson(const ClassLabel& label) {
  ordered_json obj;
  if (const Gender* g = std::get_if<Gender>(&label)) {
    obj["gender"] = std::string(GenderName(*g));
  } else if (const OccupationClass* o = std::get_if<OccupationClass>(&label)) {
    obj["occupation"] = o->name;
  } else {
    obj["country"] = std::get<CountryClass>(label).country;
  }
  return obj;
}

}  // namespace

std::string ClassKey(const ClassLabel& label) {
  if (const Gender* g = std::get_if<Gender>(&label)) {
    return std::string(GenderName(*g));
  }
  if (const OccupationClass* o = std::get_if<OccupationClass>(&label)) {
    return o->name;
  }
  return std::get<CountryClass>(label).country;
}

std::string ApplyCapitalization(const Slot& slot, std::string_view fill) {
  return slot.capitalized ? CapitalizeFirst(fill) : std::string(fill);
}

absl::StatusOr<MutantEngine> MutantEngine::Create(const ResourceBundle& bundle,
                                                  const MutantOptions& options) {
  if (options.names_per_gender < 1) {
    return absl::InvalidArgumentError("names_per_gender must be at least 1");
  }
  if (bundle.gender_nouns.empty()) {
    return absl::FailedPreconditionError("no gender nouns loaded");
  }
  absl::StatusOr<NameSelection> names =
      SelectNames(bundle, options.names_per_gender, options.name_country);
  if (!names.ok()) return names.status();
  return MutantEngine(bundle, *std::move(names));
}

Mutant MutantEngine::Fill(
    const Template& t, std::string id, ClassLabel label,
    const std::function<std::string(const Slot&)>& fill) const {
  Mutant m;
  m.id = absl::StrCat(t.id, "/", id);
  m.template_id = t.id;
  m.class_label = std::move(label);
  for (const Segment& seg : t.segments) {
    if (const Literal* lit = std::get_if<Literal>(&seg)) {
      m.text += lit->text;
      continue;
    }
    const Slot& slot = std::get<Slot>(seg);
    std::string value = ApplyCapitalization(slot, fill(slot));
    m.text += value;
    m.bindings.push_back({slot.position, std::move(value)});
  }
  return m;
}

std::vector<Mutant> MutantEngine::Instantiate(const Template& t) const {
  std::vector<Mutant> out;
  const ResourceBundle& bundle = *bundle_;
  switch (t.characteristic) {
    case Characteristic::kGender: {
      for (Gender g : {Gender::kMale, Gender::kFemale}) {
        const std::string gender(GenderName(g));
        if (!t.HasSlot(SlotKind::kName)) {
          out.push_back(Fill(t, absl::StrCat("gender=", gender), g,
                             [&](const Slot& s) {
                               return GenderFill(bundle, s, g, "");
                             }));
          continue;
        }
        const auto& names = g == Gender::kMale ? names_.male : names_.female;
        for (const std::string& name : names) {
          out.push_back(Fill(t, absl::StrCat("gender=", gender, "/name=", name),
                             g, [&](const Slot& s) {
                               return GenderFill(bundle, s, g, name);
                             }));
        }
      }
      break;
    }
    case Characteristic::kOccupation:
      for (const OccupationEntry& occ : bundle.occupations) {
        out.push_back(Fill(t, absl::StrCat("occupation=", occ.name),
                           OccupationClass{occ.name}, [&](const Slot& s) {
                             return s.kind.kind == SlotKind::kDet ? occ.det
                                                                  : occ.name;
                           }));
      }
      break;
    case Characteristic::kCountry: {
      const Gender g = t.HasSlot(SlotKind::kFemalePerson) ? Gender::kFemale
                                                           : Gender::kMale;
      for (const CountryNames& c : bundle.countries) {
        out.push_back(Fill(t, absl::StrCat("country=", c.country),
                           CountryClass{c.country},
                           [&](const Slot&) { return c.ForGender(g); }));
      }
      break;
    }
  }
  return out;
}

size_t MutantEngine::ExpectedCount(const Template& t) const {
  switch (t.characteristic) {
    case Characteristic::kGender:
      return t.HasSlot(SlotKind::kName)
                 ? names_.male.size() + names_.female.size()
                 : 2;
    case Characteristic::kOccupation:
      return bundle_->occupations.size();
    case Characteristic::kCountry:
      return bundle_->countries.size();
  }
  return 0;
}

absl::StatusOr<std::vector<Mutant>> Instantiate(const Template& t,
                                                const ResourceBundle& bundle,
                                                const MutantOptions& options) {
  absl::StatusOr<MutantEngine> engine = MutantEngine::Create(bundle, options);
  if (!engine.ok()) return engine.status();
  return engine->Instantiate(t);
}

std::string SerializeMutant(const Mutant& m) {
  ordered_json obj;
  obj["id"] = m.id;
  obj["template_id"] = m.template_id;
  obj["class"] = ClassJson(m.class_label);
  obj["text"] = m.text;
  ordered_json bindings = ordered_json::array();
  for (const Binding& b : m.bindings) {
    ordered_json e;
    e["pos"] = b.position;
    e["fill"] = b.fill;
    bindings.push_back(std::move(e));
  }
  obj["bindings"] = std::move(bindings);
  return obj.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

absl::StatusOr<Mutant> ParseMutant(std::string_view line) {
  ordered_json obj = ordered_json::parse(line, nullptr, false);
  if (obj.is_discarded() || !obj.is_object()) {
    return absl::InvalidArgumentError("not a JSON object");
  }
  Mutant m;
  for (const char* key : {"id", "template_id", "text"}) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) {
      return absl::InvalidArgumentError(
          absl::StrCat("field '", key, "' must be a string"));
    }
  }
  m.id = obj["id"].get<std::string>();
  m.template_id = obj["template_id"].get<std::string>();
  m.text = obj["text"].get<std::string>();
  auto cls = obj.find("class");
  if (cls == obj.end() || !cls->is_object() || cls->size() != 1 ||
      !cls->begin()->is_string()) {
    return absl::InvalidArgumentError(
        absl::StrCat("mutant '", m.id, "': class must be a one-key object"));
  }
  const std::string& kind = cls->begin().key();
  const std::string value = cls->begin()->get<std::string>();
  if (kind == "gender") {
    std::optional<Gender> g = ParseGender(value);
    if (!g.has_value()) {
      return absl::InvalidArgumentError(
          absl::StrCat("mutant '", m.id, "': unknown gender '", value, "'"));
    }
    m.class_label = *g;
  } else if (kind == "occupation") {
    m.class_label = OccupationClass{value};
  } else if (kind == "country") {
    m.class_label = CountryClass{value};
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("mutant '", m.id, "': unknown class kind '", kind, "'"));
  }
  auto bindings = obj.find("bindings");
  if (bindings != obj.end()) {
    if (!bindings->is_array()) {
      return absl::InvalidArgumentError(
          absl::StrCat("mutant '", m.id, "': bindings must be an array"));
    }
    for (const ordered_json& b : *bindings) {
      if (!b.is_object() || !b.contains("pos") || !b["pos"].is_number_integer() ||
          !b.contains("fill") || !b["fill"].is_string()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "mutant '", m.id, "': binding must be {\"pos\":int,\"fill\":str}"));
      }
      m.bindings.push_back({b["pos"].get<int>(), b["fill"].get<std::string>()});
    }
  }
  return m;
}

std::string MutantsToJsonl(const std::vector<Mutant>& mutants) {
  std::string out;
  for (const Mutant& m : mutants) {
    out += SerializeMutant(m);
    out += '\n';
  }
  return out;
}

absl::StatusOr<std::vector<Mutant>> ParseMutantsJsonl(std::string_view bytes) {
  std::vector<Mutant> out;
  for (const NumberedLine& line : SplitLines(bytes)) {
    absl::StatusOr<Mutant> m = ParseMutant(line.text);
    if (!m.ok()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line.line, ": ", std::string(m.status().message())));
    }
    out.push_back(*std::move(m));
  }
  return out;
}

}  // namespace fairmt
