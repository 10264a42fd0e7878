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

// Fills template slots with values from a single class.
//
// Mutant JSONL form, one mutant per line:
//
//   {"id": str, "template_id": str,
//    "class": {"gender": "male"} | {"occupation": str} | {"country": str},
//    "text": str, "bindings": [{"pos": int, "fill": str}]}

#ifndef FAIRMT_MUTANT_ENGINE_H_
#define FAIRMT_MUTANT_ENGINE_H_

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "fairmt/resources.h"
#include "fairmt/template.h"

namespace fairmt {

struct OccupationClass {
  std::string name;
  friend bool operator==(const OccupationClass&, const OccupationClass&) = default;
};

struct CountryClass {
  std::string country;
  friend bool operator==(const CountryClass&, const CountryClass&) = default;
};

using ClassLabel = std::variant<Gender, OccupationClass, CountryClass>;

// "male", "female", the occupation name, or the country.
std::string ClassKey(const ClassLabel& label);

struct Binding {
  int position = 0;  // slot position in the source text
  std::string fill;
  friend bool operator==(const Binding&, const Binding&) = default;
};

struct Mutant {
  std::string id;
  std::string template_id;
  ClassLabel class_label;
  std::string text;
  std::vector<Binding> bindings;  // slot order
  friend bool operator==(const Mutant&, const Mutant&) = default;
};

struct MutantOptions {
  int names_per_gender = 30;
  std::string name_country = "USA";
};

// Instantiates templates against one bundle. Names are selected once.
class MutantEngine {
 public:
  static absl::StatusOr<MutantEngine> Create(const ResourceBundle& bundle,
                                             const MutantOptions& options);

  // Gender: 2n mutants with a name slot, else 2. Occupation: one per
  // occupation. Country: one per country.
  std::vector<Mutant> Instantiate(const Template& t) const;

  // The count Instantiate(t) yields, without building the texts.
  size_t ExpectedCount(const Template& t) const;

  const NameSelection& names() const { return names_; }

 private:
  MutantEngine(const ResourceBundle& bundle, NameSelection names)
      : bundle_(&bundle), names_(std::move(names)) {}

  Mutant Fill(const Template& t, std::string id, ClassLabel label,
              const std::function<std::string(const Slot&)>& fill) const;

  const ResourceBundle* bundle_;
  NameSelection names_;
};

// Convenience wrapper for a single template.
absl::StatusOr<std::vector<Mutant>> Instantiate(const Template& t,
                                                const ResourceBundle& bundle,
                                                const MutantOptions& options);

// `fill` with the first letter upper-cased when the slot was capitalized.
std::string ApplyCapitalization(const Slot& slot, std::string_view fill);

std::string SerializeMutant(const Mutant& m);
absl::StatusOr<Mutant> ParseMutant(std::string_view line);

std::string MutantsToJsonl(const std::vector<Mutant>& mutants);
absl::StatusOr<std::vector<Mutant>> ParseMutantsJsonl(std::string_view bytes);

}  // namespace fairmt

#endif  // FAIRMT_MUTANT_ENGINE_H_
