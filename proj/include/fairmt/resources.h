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

// Gazetteers used to find protected features and to fill placeholders.
//
// A resource directory holds plain UTF-8 CSV files:
//   names.csv          name,gender,country,frequency
//   pronouns.csv       gender,id,surface
//   gender_nouns.csv   male,female
//   occupations.csv    name,det
//   countries.csv      country,male_name,female_name
// and optionally
//   occupation_exclusions.csv   name   (occupations never used as templates)

#ifndef FAIRMT_RESOURCES_H_
#define FAIRMT_RESOURCES_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "fairmt/csv.h"

namespace fairmt {

enum class Gender { kMale, kFemale };

std::string_view GenderName(Gender gender);
std::optional<Gender> ParseGender(std::string_view text);
Gender Opposite(Gender gender);

// spp: subjective personal, opp: objective personal, pp: possessive,
// rp: reflexive.
enum class PronounId { kSpp, kOpp, kPp, kRp };

std::string_view PronounIdName(PronounId id);
std::optional<PronounId> ParsePronounId(std::string_view text);

struct NameEntry {
  std::string given_name;
  Gender gender = Gender::kMale;
  std::string country;
  int64_t frequency = 0;
};

struct GenderNounPair {
  std::string male;
  std::string female;

  const std::string& ForGender(Gender g) const {
    return g == Gender::kMale ? male : female;
  }
};

struct OccupationEntry {
  std::string name;
  std::string det;  // "a" or "an"
};

struct CountryNames {
  std::string country;
  std::string male_name;
  std::string female_name;

  const std::string& ForGender(Gender g) const {
    return g == Gender::kMale ? male_name : female_name;
  }
};

struct ResourceBundle {
  std::vector<NameEntry> names;
  std::map<std::pair<Gender, PronounId>, std::string> pronoun_table;
  std::vector<GenderNounPair> gender_nouns;
  std::vector<OccupationEntry> occupations;
  std::vector<CountryNames> countries;
  std::vector<std::string> occupation_exclusions;

  // Rebuilds the lookup tables below. Call after editing the lists.
  void Reindex();

  // Gender of a first name. nullopt when the name is unknown or attested for
  // both genders.
  std::optional<Gender> NameGender(std::string_view name) const;
  bool IsKnownName(std::string_view name) const;

  // Lookups on lower-cased surfaces.
  const GenderNounPair* FindGenderNoun(std::string_view lower) const;
  std::optional<Gender> GenderNounGender(std::string_view lower) const;
  bool IsOccupation(std::string_view lower) const;
  bool IsExcludedOccupation(std::string_view lower) const;

  const std::string& Pronoun(Gender gender, PronounId id) const;

  // Every surface that counts as a protected feature (names, pronouns,
  // gender nouns, occupations, country names), lower-cased.
  const std::set<std::string>& ProtectedVocabulary() const {
    return protected_vocabulary_;
  }

 private:
  struct NameInfo {
    bool male = false;
    bool female = false;
  };
  std::unordered_map<std::string, NameInfo> name_index_;
  std::unordered_map<std::string, std::pair<size_t, Gender>> noun_index_;
  std::set<std::string> occupation_index_;
  std::set<std::string> exclusion_index_;
  std::set<std::string> protected_vocabulary_;
};

// Checks the bundle invariants: complete pronoun table, determiners in
// {a, an}, each country listed once and country names unique across the
// whole list.
absl::Status ValidateResources(const ResourceBundle& bundle);

// Reads a CSV resource whose header must equal `columns` (case-insensitive).
// Rows come back without the header.
absl::StatusOr<std::vector<CsvRecord>> ReadResourceTable(
    const std::filesystem::path& path,
    const std::vector<std::string_view>& columns);

absl::StatusOr<ResourceBundle> LoadResources(const std::filesystem::path& dir);

struct NameSelection {
  std::vector<std::string> male;
  std::vector<std::string> female;
};

// Top-n names per gender for `country`, by frequency descending with ties
// broken lexicographically. Names attested for both genders anywhere in the
// bundle are dropped first.
absl::StatusOr<NameSelection> SelectNames(const ResourceBundle& bundle, int n,
                                          std::string_view country);

}  // namespace fairmt

#endif  // FAIRMT_RESOURCES_H_
