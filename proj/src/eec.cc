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

#include "fairmt/eec.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "absl/strings/str_cat.h"
#include "fairmt/utf8.h"

namespace fairmt {
namespace {

constexpr std::string_view kPerson = "<person>";
constexpr std::string_view kEmotion = "<emotion>";
constexpr std::string_view kReflexive = "<reflexive>";
constexpr std::string_view kArticle = "<article>";

bool StartsWithVowel(std::string_view word) {
  return !word.empty() &&
         std::string_view("aeiou").find(static_cast<char>(
             std::tolower(static_cast<unsigned char>(word[0])))) !=
             std::string_view::npos;
}

void ReplaceAll(std::string& s, std::string_view from, std::string_view to) {
  for (size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos;
       pos += to.size()) {
    s.replace(pos, from.size(), to);
  }
}

// Fills one expanded pattern. Person and reflexive fills become bindings.
Mutant FillPerson(const std::string& template_id, std::string pattern,
                  const PersonValue& person) {
  Mutant m;
  m.template_id = template_id;
  m.class_label = person.gender;
  m.id = absl::StrCat(template_id, "/gender=", std::string(GenderName(person.gender)),
                      "/person=", person.text);
  const std::string reflexive =
      person.gender == Gender::kMale ? "himself" : "herself";
  size_t pos = 0;
  while (pos < pattern.size()) {
    const size_t p = pattern.find(kPerson, pos);
    const size_t r = pattern.find(kReflexive, pos);
    const size_t next = std::min(p, r);
    if (next == std::string::npos) {
      m.text += pattern.substr(pos);
      break;
    }
    m.text += pattern.substr(pos, next - pos);
    const int position = static_cast<int>(CodePointCount(m.text));
    std::string fill;
    if (next == p) {
      fill = next == 0 ? CapitalizeFirst(person.text) : person.text;
      pos = next + kPerson.size();
    } else {
      fill = reflexive;
      pos = next + kReflexive.size();
    }
    m.text += fill;
    m.bindings.push_back({position, std::move(fill)});
  }
  return m;
}

}  // namespace

const std::vector<EecTemplate>& EecTemplates() {
  static const std::vector<EecTemplate> kTemplates = {
      {1, "<person> feels <emotion>.", true},
      {2, "The situation makes <person> feel <emotion>.", true},
      {3, "I made <person> feel <emotion>.", true},
      {4, "<person> made me feel <emotion>.", true},
      {5, "<person> found <reflexive> in <article> <emotion> situation.", true},
      {6, "<person> told us all about the recent <emotion> events.", true},
      {7, "The conversation with <person> was <emotion>.", true},
      {8, "I saw <person> in the market.", false},
      {9, "I talked to <person> yesterday.", false},
      {10, "<person> goes to the school in our neighborhood.", false},
      {11, "<person> has two children.", false},
  };
  return kTemplates;
}

absl::Status ValidateEmotionLexicon(const EmotionLexicon& lexicon) {
  if (lexicon.size() != 4) {
    return absl::InvalidArgumentError(absl::StrCat(
        "emotion lexicon needs 4 emotions, found ", lexicon.size()));
  }
  std::set<std::string> seen;
  for (const Emotion& e : lexicon) {
    if (e.words.size() != 5) {
      return absl::InvalidArgumentError(
          absl::StrCat("emotion '", e.name, "' needs 5 words, found ",
                       e.words.size()));
    }
    for (const std::string& w : e.words) {
      if (w.empty() || !seen.insert(w).second) {
        return absl::InvalidArgumentError(
            absl::StrCat("emotion word '", w, "' is empty or repeated"));
      }
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<EmotionLexicon> LoadEmotionLexicon(
    const std::filesystem::path& path) {
  auto rows = ReadResourceTable(path, {"emotion", "word"});
  if (!rows.ok()) return rows.status();
  EmotionLexicon lexicon;
  for (const CsvRecord& row : *rows) {
    const std::string emotion = AsciiLower(row.fields[0]);
    auto it = std::find_if(lexicon.begin(), lexicon.end(),
                           [&](const Emotion& e) { return e.name == emotion; });
    if (it == lexicon.end()) {
      lexicon.push_back({emotion, {}});
      it = lexicon.end() - 1;
    }
    it->words.push_back(row.fields[1]);
  }
  if (absl::Status s = ValidateEmotionLexicon(lexicon); !s.ok()) return s;
  return lexicon;
}

absl::StatusOr<std::vector<PersonValue>> LoadNounPhrases(
    const std::filesystem::path& path) {
  auto rows = ReadResourceTable(path, {"text", "gender"});
  if (!rows.ok()) return rows.status();
  std::vector<PersonValue> out;
  for (const CsvRecord& row : *rows) {
    std::optional<Gender> g = ParseGender(row.fields[1]);
    if (!g.has_value() || row.fields[0].empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path.filename().string(), ":", row.line,
                       ": expected a phrase and male|female"));
    }
    out.push_back({row.fields[0], *g});
  }
  return out;
}

std::vector<PersonValue> DefaultEecPersons(
    const NameSelection& names, const std::vector<PersonValue>& noun_phrases) {
  std::vector<PersonValue> out;
  for (const std::string& n : names.male) out.push_back({n, Gender::kMale});
  for (const std::string& n : names.female) out.push_back({n, Gender::kFemale});
  out.insert(out.end(), noun_phrases.begin(), noun_phrases.end());
  return out;
}

absl::StatusOr<EecResult> GenerateEec(const std::vector<PersonValue>& persons,
                                      const EmotionLexicon& lexicon,
                                      EecMode mode) {
  if (absl::Status s = ValidateEmotionLexicon(lexicon); !s.ok()) return s;
  if (persons.empty()) {
    return absl::InvalidArgumentError("EEC needs at least one person value");
  }
  EecResult result;
  auto expand = [&](const std::string& id, const std::string& pattern) {
    result.template_ids.push_back(id);
    for (const PersonValue& p : persons) {
      result.mutants.push_back(FillPerson(id, pattern, p));
    }
  };
  for (const EecTemplate& t : EecTemplates()) {
    if (!t.emotional) {
      if (mode == EecMode::kAll) expand(absl::StrCat("eec-", t.index), t.pattern);
      continue;
    }
    for (const Emotion& e : lexicon) {
      for (const std::string& word : e.words) {
        std::string pattern = t.pattern;
        ReplaceAll(pattern, kArticle, StartsWithVowel(word) ? "an" : "a");
        ReplaceAll(pattern, kEmotion, word);
        expand(absl::StrCat("eec-", t.index, "/", word), pattern);
      }
    }
  }
  return result;
}

}  // namespace fairmt
