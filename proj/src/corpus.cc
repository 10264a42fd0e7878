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

#include "fairmt/corpus.h"

#include <cctype>
#include <map>
#include <unordered_map>
#include <utility>

#include "absl/strings/str_cat.h"
#include "fairmt/csv.h"
#include "fairmt/io.h"
#include "fairmt/utf8.h"
#include "json.hpp"

namespace fairmt {
namespace {

using ordered_json = nlohmann::ordered_json;

bool IsTagStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '/' || c == '!' ||
         c == '?';
}

// Replaces each tag with a single space so words on either side stay apart.
std::string StripTags(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '<' && i + 1 < s.size() && IsTagStart(s[i + 1])) {
      const size_t close = s.find_first_of("<>", i + 1);
      if (close != std::string_view::npos && s[close] == '>') {
        out.push_back(' ');
        i = close + 1;
        continue;
      }
    }
    out.push_back(s[i]);
    ++i;
  }
  return out;
}

std::optional<char32_t> DecodeNumericEntity(std::string_view body) {
  // body is what sits between "&#" and ";".
  if (body.empty() || body.size() > 8) return std::nullopt;
  int base = 10;
  if (body[0] == 'x' || body[0] == 'X') {
    base = 16;
    body.remove_prefix(1);
    if (body.empty()) return std::nullopt;
  }
  char32_t value = 0;
  for (char c : body) {
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (base == 16 && c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else if (base == 16 && c >= 'A' && c <= 'F') {
      digit = c - 'A' + 10;
    } else {
      return std::nullopt;
    }
    value = value * base + digit;
  }
  if (value == 0 || value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
    return std::nullopt;
  }
  return value;
}

std::string DecodeEntities(std::string_view s) {
  static const std::unordered_map<std::string_view, char32_t> kNamed = {
      {"amp", '&'},   {"lt", '<'},      {"gt", '>'},
      {"quot", '"'},  {"apos", '\''},   {"nbsp", 0x00A0},
  };
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '&') {
      const size_t semi = s.find(';', i + 1);
      if (semi != std::string_view::npos && semi - i <= 10) {
        std::string_view body = s.substr(i + 1, semi - i - 1);
        std::optional<char32_t> cp;
        if (!body.empty() && body[0] == '#') {
          cp = DecodeNumericEntity(body.substr(1));
        } else if (auto it = kNamed.find(body); it != kNamed.end()) {
          cp = it->second;
        }
        if (cp.has_value()) {
          AppendUtf8(out, *cp);
          i = semi + 1;
          continue;
        }
      }
    }
    out.push_back(s[i]);
    ++i;
  }
  return out;
}

std::string CollapseWhitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    size_t width = 0;
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
        c == '\v') {
      width = 1;
    } else if (c == 0xC2 && i + 1 < s.size() &&
               static_cast<unsigned char>(s[i + 1]) == 0xA0) {
      width = 2;  // U+00A0
    }
    if (width > 0) {
      pending_space = true;
      i += width;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(s[i]);
    ++i;
  }
  return out;
}

// Cuts `text` to at most `max_chars` code points, preferring the end of the
// last complete sentence.
std::string TruncateAtSentence(const std::string& text, size_t max_chars) {
  const std::vector<size_t> offsets = CodePointByteOffsets(text);
  const size_t limit_byte = offsets[max_chars];
  size_t cut = std::string::npos;
  for (size_t i = 0; i < limit_byte; ++i) {
    const char c = text[i];
    if ((c == '.' || c == '!' || c == '?') &&
        (i + 1 == text.size() || text[i + 1] == ' ')) {
      cut = i + 1;
    }
  }
  if (cut == std::string::npos) cut = limit_byte;
  std::string out = text.substr(0, cut);
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

struct RawRecord {
  int line = 0;
  std::optional<std::string> id;
  std::optional<std::string> text;
  std::optional<std::string> label;  // raw label text; empty means absent
};

void Finish(std::vector<RawRecord> raw, std::string_view source,
            const CorpusOptions& options, Corpus& corpus,
            absl::Status& status) {
  std::map<std::string, int> seen_ids;
  for (RawRecord& r : raw) {
    if (!r.id.has_value() || r.id->empty()) {
      corpus.rejects.push_back({std::nullopt, r.line, "missing id"});
      continue;
    }
    if (!r.text.has_value()) {
      corpus.rejects.push_back({r.id, r.line, "missing text"});
      continue;
    }
    std::optional<SentimentLabel> label;
    if (r.label.has_value() && !r.label->empty()) {
      label = ParseLabel(*r.label);
      if (!label.has_value()) {
        corpus.rejects.push_back({r.id, r.line, "binary labels only"});
        continue;
      }
    }
    auto [it, inserted] = seen_ids.emplace(*r.id, r.line);
    if (!inserted) {
      status = absl::InvalidArgumentError(
          absl::StrCat("duplicate document id '", *r.id, "' at lines ",
                       it->second, " and ", r.line));
      return;
    }
    Document doc;
    doc.id = std::move(*r.id);
    doc.text = CleanText(*r.text);
    if (CodePointCount(doc.text) > options.max_chars) {
      doc.text = TruncateAtSentence(doc.text, options.max_chars);
      corpus.warnings.push_back(
          {doc.id, r.line,
           absl::StrCat("truncated to ", CodePointCount(doc.text),
                        " characters (limit ", options.max_chars, ")")});
    }
    doc.gold_label = label;
    doc.source = std::string(source);
    corpus.documents.push_back(std::move(doc));
  }
}

std::vector<RawRecord> ReadCsvRecords(std::string_view bytes, Corpus& corpus,
                                      absl::Status& status) {
  std::vector<RawRecord> raw;
  CsvParseResult parsed = ParseCsv(bytes);
  for (const CsvError& e : parsed.errors) {
    corpus.rejects.push_back({std::nullopt, e.line, e.reason});
  }
  if (parsed.records.empty()) {
    if (!bytes.empty() && parsed.errors.empty()) {
      status = absl::InvalidArgumentError("CSV header row missing");
    }
    return raw;
  }
  const CsvRecord& header = parsed.records.front();
  int id_col = -1, text_col = -1, label_col = -1;
  for (size_t i = 0; i < header.fields.size(); ++i) {
    const std::string name = AsciiLower(header.fields[i]);
    if (name == "id") id_col = static_cast<int>(i);
    if (name == "text") text_col = static_cast<int>(i);
    if (name == "label") label_col = static_cast<int>(i);
  }
  if (id_col < 0 || text_col < 0) {
    status = absl::InvalidArgumentError(
        "CSV header must contain 'id' and 'text' columns");
    return raw;
  }
  for (size_t r = 1; r < parsed.records.size(); ++r) {
    const CsvRecord& rec = parsed.records[r];
    if (rec.fields.size() != header.fields.size()) {
      std::optional<std::string> id;
      if (static_cast<int>(rec.fields.size()) > id_col) id = rec.fields[id_col];
      corpus.rejects.push_back(
          {id, rec.line,
           absl::StrCat("expected ", header.fields.size(), " fields, found ",
                        rec.fields.size())});
      continue;
    }
    RawRecord out;
    out.line = rec.line;
    out.id = rec.fields[id_col];
    out.text = rec.fields[text_col];
    if (label_col >= 0) out.label = rec.fields[label_col];
    raw.push_back(std::move(out));
  }
  return raw;
}

std::vector<RawRecord> ReadJsonlRecords(std::string_view bytes,
                                        Corpus& corpus) {
  std::vector<RawRecord> raw;
  for (const NumberedLine& line : SplitLines(bytes)) {
    ordered_json obj = ordered_json::parse(line.text, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
      corpus.rejects.push_back({std::nullopt, line.line, "not a JSON object"});
      continue;
    }
    RawRecord r;
    r.line = line.line;
    if (auto it = obj.find("id"); it != obj.end()) {
      if (it->is_string()) {
        r.id = it->get<std::string>();
      } else if (it->is_number_integer()) {
        r.id = std::to_string(it->get<long long>());
      }
    }
    if (auto it = obj.find("text"); it != obj.end()) {
      if (!it->is_string()) {
        corpus.rejects.push_back({r.id, line.line, "text is not a string"});
        continue;
      }
      r.text = it->get<std::string>();
    }
    if (auto it = obj.find("label"); it != obj.end() && !it->is_null()) {
      if (!it->is_string()) {
        corpus.rejects.push_back({r.id, line.line, "binary labels only"});
        continue;
      }
      r.label = it->get<std::string>();
    }
    raw.push_back(std::move(r));
  }
  return raw;
}

}  // namespace

std::string_view LabelName(SentimentLabel label) {
  return label == SentimentLabel::kPositive ? "positive" : "negative";
}

std::optional<SentimentLabel> ParseLabel(std::string_view text) {
  const std::string lower = AsciiLower(text);
  if (lower == "positive") return SentimentLabel::kPositive;
  if (lower == "negative") return SentimentLabel::kNegative;
  return std::nullopt;
}

absl::StatusOr<CorpusFormat> ParseCorpusFormat(std::string_view name) {
  const std::string lower = AsciiLower(name);
  if (lower == "csv") return CorpusFormat::kCsv;
  if (lower == "jsonl") return CorpusFormat::kJsonl;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown corpus format '", std::string(name), "' (expected csv|jsonl)"));
}

std::string_view CorpusFormatName(CorpusFormat format) {
  return format == CorpusFormat::kCsv ? "csv" : "jsonl";
}

std::string CleanText(std::string_view raw) {
  // Decoding can expose new markup ("&lt;b&gt;") and stripping can join new
  // entities, so iterate to a fixpoint. Every pass either shrinks the text
  // or leaves it unchanged.
  std::string current = CollapseWhitespace(raw);
  for (;;) {
    std::string next = CollapseWhitespace(DecodeEntities(StripTags(current)));
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

absl::StatusOr<Corpus> ParseCorpus(std::string_view bytes, CorpusFormat format,
                                   std::string_view source,
                                   const CorpusOptions& options) {
  Corpus corpus;
  int replaced = 0;
  const std::string clean_bytes = SanitizeUtf8(bytes, &replaced);
  if (replaced > 0) {
    corpus.warnings.push_back(
        {std::nullopt, 0,
         absl::StrCat("replaced ", replaced, " invalid UTF-8 sequence(s)")});
  }
  absl::Status status;
  std::vector<RawRecord> raw = format == CorpusFormat::kCsv
                                   ? ReadCsvRecords(clean_bytes, corpus, status)
                                   : ReadJsonlRecords(clean_bytes, corpus);
  if (!status.ok()) return status;
  Finish(std::move(raw), source, options, corpus, status);
  if (!status.ok()) return status;
  return corpus;
}

absl::StatusOr<Corpus> LoadCorpus(const std::filesystem::path& path,
                                  CorpusFormat format,
                                  const CorpusOptions& options) {
  absl::StatusOr<std::string> bytes = ReadFileToString(path);
  if (!bytes.ok()) return bytes.status();
  return ParseCorpus(*bytes, format, path.string(), options);
}

std::string IngestRecordsToJsonl(const std::vector<IngestRecord>& records) {
  std::string out;
  for (const IngestRecord& r : records) {
    ordered_json obj;
    if (r.id.has_value()) obj["id"] = *r.id;
    obj["line"] = r.line;
    obj["reason"] = r.reason;
    out += obj.dump();
    out += '\n';
  }
  return out;
}

std::string DocumentsToJsonl(const std::vector<Document>& documents) {
  std::string out;
  for (const Document& d : documents) {
    ordered_json obj;
    obj["id"] = d.id;
    obj["text"] = d.text;
    if (d.gold_label.has_value()) obj["label"] = LabelName(*d.gold_label);
    out += obj.dump();
    out += '\n';
  }
  return out;
}

}  // namespace fairmt
