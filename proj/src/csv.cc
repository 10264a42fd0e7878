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
#include "fairmt/csv.h"

namespace fairmt {

CsvParseResult ParseCsv(std::string_view text) {
  CsvParseResult result;
  size_t pos = 0;
  int line = 1;
  const size_t n = text.size();

  auto skip_to_next_line = [&]() {
    while (pos < n && text[pos] != '\n') ++pos;
    if (pos < n) {
      ++pos;
      ++line;
    }
  };

  while (pos < n) {
    // Blank line.
    if (text[pos] == '\n' || (text[pos] == '\r' && pos + 1 < n &&
                              text[pos + 1] == '\n')) {
      pos += text[pos] == '\r' ? 2 : 1;
      ++line;
      continue;
    }
    CsvRecord record;
    record.line = line;
    std::string field;
    bool in_quotes = false;
    bool quoted_field = false;
    bool after_quote = false;
    bool done = false;
    std::string error;
    while (!done) {
      if (pos >= n) {
        if (in_quotes) {
          error = "unterminated quoted field";
        } else {
          record.fields.push_back(std::move(field));
        }
        break;
      }
      const char c = text[pos];
      if (in_quotes) {
        if (c == '"') {
          if (pos + 1 < n && text[pos + 1] == '"') {
            field.push_back('"');
            pos += 2;
          } else {
            in_quotes = false;
            after_quote = true;
            ++pos;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
          ++pos;
        }
        continue;
      }
      if (c == ',') {
        record.fields.push_back(std::move(field));
        field.clear();
        quoted_field = false;
        after_quote = false;
        ++pos;
      } else if (c == '\n' || (c == '\r' && pos + 1 < n && text[pos + 1] == '\n')) {
        record.fields.push_back(std::move(field));
        pos += c == '\r' ? 2 : 1;
        ++line;
        done = true;
      } else if (after_quote) {
        error = "unexpected character after closing quote";
        break;
      } else if (c == '"') {
        if (!field.empty() || quoted_field) {
          error = "quote inside unquoted field";
          break;
        }
        in_quotes = true;
        quoted_field = true;
        ++pos;
      } else {
        field.push_back(c);
        ++pos;
      }
    }
    if (!error.empty()) {
      result.errors.push_back({record.line, std::move(error)});
      skip_to_next_line();
      continue;
    }
    result.records.push_back(std::move(record));
  }
  return result;
}

std::string CsvEscape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace fairmt
