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
// Minimal RFC-4180 CSV reader and field escaping.

#ifndef FAIRMT_CSV_H_
#define FAIRMT_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace fairmt {

struct CsvRecord {
  int line = 0;  // 1-based physical line where the record starts
  std::vector<std::string> fields;
};

struct CsvError {
  int line = 0;
  std::string reason;
};

struct CsvParseResult {
  std::vector<CsvRecord> records;
  std::vector<CsvError> errors;
};

// Parses the whole input. Malformed records are reported in `errors` and
// parsing resumes at the next line. Blank lines are skipped.
CsvParseResult ParseCsv(std::string_view text);

// Quotes the field when it contains a comma, quote, or line break.
std::string CsvEscape(std::string_view field);

}  // namespace fairmt

#endif  // FAIRMT_CSV_H_
