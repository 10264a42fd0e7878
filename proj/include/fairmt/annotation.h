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

// Linguistic annotation of one document: tokens with coarse POS tags,
// entity spans, coreference chains and dependency edges.
//
// Annotations arrive either from an external NLP bridge as JSON Lines, one
// document per line:
//
//   {"doc_id": str,
//    "tokens":   [{"i":int,"text":str,"pos":str,"start":int,"end":int,
//                  "fine":str?}],
//    "entities": [{"first":int,"last":int,"cat":"Person"|"Occupation"|"Other"}],
//    "chains":   [[{"first":int,"last":int}]],
//    "edges":    [{"head":int,"dep":int,"label":str}]}
//
// or from HeuristicAnnotate (heuristic_annotator.h). Token offsets are
// code-point offsets into the cleaned document text.

#ifndef FAIRMT_ANNOTATION_H_
#define FAIRMT_ANNOTATION_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "fairmt/corpus.h"

namespace fairmt {

enum class Pos { kPropn, kNoun, kPron, kVerb, kDet, kAdp, kAdj, kPunct, kOther };

std::string_view PosName(Pos pos);
std::optional<Pos> ParsePos(std::string_view name);

// Inclusive token range.
struct TokenRange {
  int first = 0;
  int last = 0;

  bool Contains(int token) const { return token >= first && token <= last; }
  bool Overlaps(const TokenRange& o) const {
    return first <= o.last && o.first <= last;
  }
  int size() const { return last - first + 1; }
  friend bool operator==(const TokenRange&, const TokenRange&) = default;
  friend auto operator<=>(const TokenRange&, const TokenRange&) = default;
};

struct Token {
  int index = 0;
  std::string text;
  Pos pos = Pos::kOther;
  int start = 0;  // code points, [start, end)
  int end = 0;
  std::string fine;  // fine-grained tag from the bridge, if any

  // Byte offsets into the bound document text; set by BindDocument.
  size_t byte_begin = 0;
  size_t byte_end = 0;
};

enum class EntityCategory { kPerson, kOccupation, kOther };

std::string_view EntityCategoryName(EntityCategory category);

struct EntitySpan {
  TokenRange range;
  EntityCategory category = EntityCategory::kOther;
  std::string text;  // filled once bound
};

struct Mention {
  TokenRange range;
  std::string text;  // filled once bound
};

struct CorefChain {
  std::vector<Mention> mentions;  // document order
};

struct DependencyEdge {
  int head = 0;
  int dependent = 0;
  std::string label;
};

struct Annotation {
  std::string doc_id;
  std::vector<Token> tokens;
  std::vector<EntitySpan> entities;
  std::vector<CorefChain> chains;
  std::vector<DependencyEdge> edges;

  // Source text once bound to its document; empty before.
  std::string text;
  bool bound = false;

  // Surface of a token range in the bound text, original spacing included.
  std::string_view Surface(const TokenRange& range) const;
};

struct AnnotationWarning {
  std::string doc_id;
  std::string message;
};

struct AnnotationSet {
  std::vector<Annotation> annotations;
  std::vector<AnnotationWarning> warnings;
};

// Parses annotation JSONL and checks every structural invariant. Errors name
// the document and the offending field path, e.g.
// `doc 'r17': chains[0][1].last: token index 9 out of range (4 tokens)`.
absl::StatusOr<AnnotationSet> ParseAnnotationFile(std::string_view bytes);
absl::StatusOr<AnnotationSet> LoadAnnotationFile(
    const std::filesystem::path& path);

// Structural checks only (ranges, ordering, edge tree shape).
absl::Status ValidateAnnotation(const Annotation& ann);

// Canonical single-line JSON (no trailing newline). Keys appear in schema
// order; "fine" is omitted when empty.
std::string SerializeAnnotation(const Annotation& ann);

// Attaches `doc` to `ann`: checks doc ids match and every token's span
// reproduces its text, then fills byte offsets and entity/mention surfaces.
absl::Status BindDocument(Annotation& ann, const Document& doc);

struct RootResult {
  int token = -1;
  bool ambiguous = false;  // more than one token in the range had no head
};

// The token in `range` with no incoming edge from another token inside the
// range. When several qualify the first one wins and `ambiguous` is set.
RootResult RootOf(const TokenRange& range, const Annotation& ann);

// Sentence number of every token. Sentences end after a "." "!" or "?"
// punctuation token (runs of them count as one boundary).
std::vector<int> SentenceIds(const Annotation& ann);

// True when `token` ("her") reads as a possessive. Uses the fine tag when
// present (PRP$ vs PRP), otherwise looks for a following noun, allowing one
// adjective in between.
bool IsPossessivePronoun(const Annotation& ann, int token);

}  // namespace fairmt

#endif  // FAIRMT_ANNOTATION_H_
