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

// Corpus ingestion: review files in, cleaned documents out.
//
// Two input formats are accepted:
//   CSV   - header row required, columns `id,text` and optionally `label`
//           (any order, extra columns ignored), RFC-4180 quoting.
//   JSONL - one object per line with keys `id`, `text` and optional `label`.
//
// Bad records never abort a load. They are collected into a rejects report
// (`{id?, line, reason}`) and the rest of the file is loaded. The one hard
// error is a duplicated document id.

#ifndef FAIRMT_CORPUS_H_
#define FAIRMT_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace fairmt {

// Binary sentiment. There is deliberately no neutral value.
enum class SentimentLabel { kPositive, kNegative };

// "positive" / "negative".
std::string_view LabelName(SentimentLabel label);

// Case-insensitive "positive" / "negative"; anything else is nullopt.
std::optional<SentimentLabel> ParseLabel(std::string_view text);

struct Document {
  std::string id;
  std::string text;  // cleaned
  std::optional<SentimentLabel> gold_label;
  std::string source;
};

enum class CorpusFormat { kCsv, kJsonl };

absl::StatusOr<CorpusFormat> ParseCorpusFormat(std::string_view name);
std::string_view CorpusFormatName(CorpusFormat format);

// One entry of the rejects or warnings report.
struct IngestRecord {
  std::optional<std::string> id;
  int line = 0;
  std::string reason;
};

struct CorpusOptions {
  // Documents longer than this many code points are cut at the last sentence
  // boundary before the limit.
  size_t max_chars = 10000;
};

struct Corpus {
  std::vector<Document> documents;  // file order
  std::vector<IngestRecord> rejects;
  std::vector<IngestRecord> warnings;
};

// Strips HTML tags, decodes the common entities, collapses whitespace runs
// and trims. Idempotent.
std::string CleanText(std::string_view raw);

absl::StatusOr<Corpus> ParseCorpus(std::string_view bytes, CorpusFormat format,
                                   std::string_view source,
                                   const CorpusOptions& options = {});

absl::StatusOr<Corpus> LoadCorpus(const std::filesystem::path& path,
                                  CorpusFormat format,
                                  const CorpusOptions& options = {});

// JSONL, one `{"id"?, "line", "reason"}` object per record.
std::string IngestRecordsToJsonl(const std::vector<IngestRecord>& records);

// JSONL `{"id","text"}` (plus "label" when known), the input format of the
// external annotation bridge.
std::string DocumentsToJsonl(const std::vector<Document>& documents);

}  // namespace fairmt

#endif  // FAIRMT_CORPUS_H_
