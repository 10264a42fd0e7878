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

#include "fairmt/resources.h"

#include <algorithm>
#include <charconv>

#include "absl/strings/str_cat.h"
#include "fairmt/csv.h"
#include "fairmt/io.h"
#include "fairmt/utf8.h"

namespace fairmt {
namespace {

absl::Status RowError(const std::filesystem::path& file, int line,
                      std::string_view what) {
  return absl::InvalidArgumentError(
      absl::StrCat(file.filename().string(), ":", line, ": ", std::string(what)));
}

}  // namespace

absl::StatusOr<std::vector<CsvRecord>> ReadResourceTable(
    const std::filesystem::path& path,
    const std::vector<std::string_view>& columns) {
  absl::StatusOr<std::string> bytes = ReadFileToString(path);
  if (!bytes.ok()) {
    return absl::NotFoundError(
        absl::StrCat("missing resource file ", path.string()));
  }
  CsvParseResult parsed = ParseCsv(*bytes);
  if (!parsed.errors.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path.filename().string(), ":", parsed.errors[0].line, ": ",
                     parsed.errors[0].reason));
  }
  if (parsed.records.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path.filename().string(), ": missing header"));
  }
  const std::vector<std::string>& header = parsed.records[0].fields;
  bool header_ok = header.size() == columns.size();
  for (size_t i = 0; header_ok && i < columns.size(); ++i) {
    header_ok = AsciiLower(header[i]) == columns[i];
  }
  if (!header_ok) {
    std::string expected;
    for (std::string_view c : columns) {
      absl::StrAppend(&expected, expected.empty() ? "" : ",", std::string(c));
    }
    return absl::InvalidArgumentError(absl::StrCat(
        path.filename().string(), ": header must be '", expected, "'"));
  }
  std::vector<CsvRecord> rows(parsed.records.begin() + 1, parsed.records.end());
  for (const CsvRecord& row : rows) {
    if (row.fields.size() != columns.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path.filename().string(), ":", row.line, ": expected ",
                       columns.size(), " fields"));
    }
  }
  return rows;
}

std::string_view GenderName(Gender gender) {
  return gender == Gender::kMale ? "male" : "female";
}

std::optional<Gender> ParseGender(std::string_view text) {
  const std::string lower = AsciiLower(text);
  if (lower == "male" || lower == "m") return Gender::kMale;
  if (lower == "female" || lower == "f") return Gender::kFemale;
  return std::nullopt;
}

Gender Opposite(Gender gender) {
  return gender == Gender::kMale ? Gender::kFemale : Gender::kMale;
}

std::string_view PronounIdName(PronounId id) {
  switch (id) {
    case PronounId::kSpp:
      return "spp";
    case PronounId::kOpp:
      return "opp";
    case PronounId::kPp:
      return "pp";
    case PronounId::kRp:
      return "rp";
  }
  return "spp";
}

std::optional<PronounId> ParsePronounId(std::string_view text) {
  const std::string lower = AsciiLower(text);
  if (lower == "spp") return PronounId::kSpp;
  if (lower == "opp") return PronounId::kOpp;
  if (lower == "pp") return PronounId::kPp;
  if (lower == "rp") return PronounId::kRp;
  return std::nullopt;
}

void ResourceBundle::Reindex() {
  name_index_.clear();
  noun_index_.clear();
  occupation_index_.clear();
  exclusion_index_.clear();
  protected_vocabulary_.clear();
  for (const NameEntry& n : names) {
    NameInfo& info = name_index_[n.given_name];
    (n.gender == Gender::kMale ? info.male : info.female) = true;
    protected_vocabulary_.insert(AsciiLower(n.given_name));
  }
  for (size_t i = 0; i < gender_nouns.size(); ++i) {
    noun_index_.emplace(AsciiLower(gender_nouns[i].male),
                        std::make_pair(i, Gender::kMale));
    noun_index_.emplace(AsciiLower(gender_nouns[i].female),
                        std::make_pair(i, Gender::kFemale));
    protected_vocabulary_.insert(AsciiLower(gender_nouns[i].male));
    protected_vocabulary_.insert(AsciiLower(gender_nouns[i].female));
  }
  for (const OccupationEntry& o : occupations) {
    occupation_index_.insert(AsciiLower(o.name));
    protected_vocabulary_.insert(AsciiLower(o.name));
  }
  for (const std::string& e : occupation_exclusions) {
    exclusion_index_.insert(AsciiLower(e));
  }
  for (const CountryNames& c : countries) {
    protected_vocabulary_.insert(AsciiLower(c.male_name));
    protected_vocabulary_.insert(AsciiLower(c.female_name));
    protected_vocabulary_.insert(AsciiLower(c.country));
  }
  for (const auto& [key, surface] : pronoun_table) {
    protected_vocabulary_.insert(AsciiLower(surface));
  }
}

std::optional<Gender> ResourceBundle::NameGender(std::string_view name) const {
  auto it = name_index_.find(std::string(name));
  if (it == name_index_.end() || it->second.male == it->second.female) {
    return std::nullopt;
  }
  return it->second.male ? Gender::kMale : Gender::kFemale;
}

bool ResourceBundle::IsKnownName(std::string_view name) const {
  return name_index_.contains(std::string(name));
}

const GenderNounPair* ResourceBundle::FindGenderNoun(
    std::string_view lower) const {
  auto it = noun_index_.find(std::string(lower));
  return it == noun_index_.end() ? nullptr : &gender_nouns[it->second.first];
}

std::optional<Gender> ResourceBundle::GenderNounGender(
    std::string_view lower) const {
  auto it = noun_index_.find(std::string(lower));
  if (it == noun_index_.end()) return std::nullopt;
  return it->second.second;
}

bool ResourceBundle::IsOccupation(std::string_view lower) const {
  return occupation_index_.contains(std::string(lower));
}

bool ResourceBundle::IsExcludedOccupation(std::string_view lower) const {
  return exclusion_index_.contains(std::string(lower));
}

const std::string& ResourceBundle::Pronoun(Gender gender, PronounId id) const {
  return pronoun_table.at({gender, id});
}

absl::Status ValidateResources(const ResourceBundle& bundle) {
  for (Gender g : {Gender::kMale, Gender::kFemale}) {
    for (PronounId id :
         {PronounId::kSpp, PronounId::kOpp, PronounId::kPp, PronounId::kRp}) {
      if (!bundle.pronoun_table.contains({g, id})) {
        return absl::InvalidArgumentError(
            absl::StrCat("pronoun table incomplete: no ",
                         std::string(GenderName(g)), "/",
                         std::string(PronounIdName(id)), " entry"));
      }
    }
  }
  for (const OccupationEntry& o : bundle.occupations) {
    if (o.det != "a" && o.det != "an") {
      return absl::InvalidArgumentError(absl::StrCat(
          "occupation '", o.name, "' has determiner '", o.det,
          "' (expected a|an)"));
    }
  }
  std::map<std::string, std::string> name_owner;
  std::set<std::string> seen_countries;
  for (const CountryNames& c : bundle.countries) {
    if (!seen_countries.insert(c.country).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate country '", c.country, "'"));
    }
    for (const std::string* name : {&c.male_name, &c.female_name}) {
      auto [it, inserted] = name_owner.emplace(*name, c.country);
      if (!inserted) {
        return absl::InvalidArgumentError(
            absl::StrCat("country name '", *name, "' listed under both '",
                         it->second, "' and '", c.country, "'"));
      }
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<ResourceBundle> LoadResources(const std::filesystem::path& dir) {
  ResourceBundle bundle;

  const auto names_path = dir / "names.csv";
  auto names = ReadResourceTable(names_path, {"name", "gender", "country", "frequency"});
  if (!names.ok()) return names.status();
  for (const CsvRecord& row : *names) {
    NameEntry e;
    e.given_name = row.fields[0];
    auto g = ParseGender(row.fields[1]);
    if (!g.has_value()) return RowError(names_path, row.line, "bad gender");
    e.gender = *g;
    e.country = row.fields[2];
    const std::string& f = row.fields[3];
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), e.frequency);
    if (ec != std::errc() || ptr != f.data() + f.size() || e.frequency < 0) {
      return RowError(names_path, row.line, "bad frequency");
    }
    bundle.names.push_back(std::move(e));
  }

  const auto pronouns_path = dir / "pronouns.csv";
  auto pronouns = ReadResourceTable(pronouns_path, {"gender", "id", "surface"});
  if (!pronouns.ok()) return pronouns.status();
  for (const CsvRecord& row : *pronouns) {
    auto g = ParseGender(row.fields[0]);
    auto id = ParsePronounId(row.fields[1]);
    if (!g.has_value() || !id.has_value()) {
      return RowError(pronouns_path, row.line, "bad gender or pronoun id");
    }
    if (!bundle.pronoun_table.emplace(std::make_pair(*g, *id), row.fields[2])
             .second) {
      return RowError(pronouns_path, row.line, "duplicate pronoun entry");
    }
  }

  auto nouns = ReadResourceTable(dir / "gender_nouns.csv", {"male", "female"});
  if (!nouns.ok()) return nouns.status();
  for (const CsvRecord& row : *nouns) {
    bundle.gender_nouns.push_back(
        {AsciiLower(row.fields[0]), AsciiLower(row.fields[1])});
  }

  auto occupations = ReadResourceTable(dir / "occupations.csv", {"name", "det"});
  if (!occupations.ok()) return occupations.status();
  for (const CsvRecord& row : *occupations) {
    bundle.occupations.push_back({row.fields[0], AsciiLower(row.fields[1])});
  }

  auto countries =
      ReadResourceTable(dir / "countries.csv", {"country", "male_name", "female_name"});
  if (!countries.ok()) return countries.status();
  for (const CsvRecord& row : *countries) {
    bundle.countries.push_back({row.fields[0], row.fields[1], row.fields[2]});
  }

  if (std::filesystem::exists(dir / "occupation_exclusions.csv")) {
    auto excl = ReadResourceTable(dir / "occupation_exclusions.csv", {"name"});
    if (!excl.ok()) return excl.status();
    for (const CsvRecord& row : *excl) {
      bundle.occupation_exclusions.push_back(AsciiLower(row.fields[0]));
    }
  }

  if (absl::Status s = ValidateResources(bundle); !s.ok()) return s;
  bundle.Reindex();
  for (const OccupationEntry& o : bundle.occupations) {
    if (bundle.IsExcludedOccupation(AsciiLower(o.name))) {
      return absl::InvalidArgumentError(absl::StrCat(
          "occupation '", o.name, "' is also on the exclusion list"));
    }
  }
  return bundle;
}

absl::StatusOr<NameSelection> SelectNames(const ResourceBundle& bundle, int n,
                                          std::string_view country) {
  if (n < 1) return absl::InvalidArgumentError("names per gender must be >= 1");
  std::map<std::string, std::set<Gender>> genders;
  for (const NameEntry& e : bundle.names) genders[e.given_name].insert(e.gender);

  NameSelection selection;
  for (Gender g : {Gender::kMale, Gender::kFemale}) {
    // The same name may appear once per (gender, country); keep the largest
    // frequency.
    std::map<std::string, int64_t> freq;
    for (const NameEntry& e : bundle.names) {
      if (e.gender != g || e.country != country) continue;
      if (genders[e.given_name].size() > 1) continue;
      int64_t& f = freq[e.given_name];
      f = std::max(f, e.frequency);
    }
    std::vector<std::pair<std::string, int64_t>> ranked(freq.begin(),
                                                        freq.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    if (static_cast<int>(ranked.size()) < n) {
      return absl::FailedPreconditionError(absl::StrCat(
          "need ", n, " ", std::string(GenderName(g)), " names for ",
          std::string(country), ", only ",
          ranked.size(), " available"));
    }
    auto& out = g == Gender::kMale ? selection.male : selection.female;
    for (int i = 0; i < n; ++i) out.push_back(ranked[i].first);
  }
  return selection;
}

}  // namespace fairmt
