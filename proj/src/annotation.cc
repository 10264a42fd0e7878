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

#include "fairmt/annotation.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "fairmt/io.h"
#include "fairmt/utf8.h"
#include "json.hpp"

namespace fairmt {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

absl::Status FieldError(std::string_view doc_id, std::string_view path,
                        std::string_view what) {
  return absl::InvalidArgumentError(
      absl::StrCat("doc '", std::string(doc_id), "': ", std::string(path), ": ",
                   std::string(what)));
}

// Typed accessors that report the field path on failure.
absl::StatusOr<int> GetInt(const json& obj, std::string_view key,
                           std::string_view doc_id, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) return FieldError(doc_id, path + "." + std::string(key), "missing");
  if (!it->is_number_integer()) {
    return FieldError(doc_id, path + "." + std::string(key), "expected integer");
  }
  return it->get<int>();
}

absl::StatusOr<std::string> GetString(const json& obj, std::string_view key,
                                      std::string_view doc_id,
                                      const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) return FieldError(doc_id, path + "." + std::string(key), "missing");
  if (!it->is_string()) {
    return FieldError(doc_id, path + "." + std::string(key), "expected string");
  }
  return it->get<std::string>();
}

absl::StatusOr<const json*> GetArray(const json& obj, std::string_view key,
                                     std::string_view doc_id) {
  auto it = obj.find(key);
  if (it == obj.end()) return FieldError(doc_id, key, "missing");
  if (!it->is_array()) return FieldError(doc_id, key, "expected array");
  return &*it;
}

absl::StatusOr<TokenRange> GetRange(const json& obj, std::string_view doc_id,
                                    const std::string& path) {
  if (!obj.is_object()) return FieldError(doc_id, path, "expected object");
  auto first = GetInt(obj, "first", doc_id, path);
  if (!first.ok()) return first.status();
  auto last = GetInt(obj, "last", doc_id, path);
  if (!last.ok()) return last.status();
  return TokenRange{*first, *last};
}

absl::Status CheckRange(const TokenRange& r, size_t token_count,
                        std::string_view doc_id, const std::string& path) {
  const int n = static_cast<int>(token_count);
  if (r.first < 0 || r.first >= n) {
    return FieldError(doc_id, path + ".first",
                      absl::StrCat("token index ", r.first, " out of range (",
                                   n, " tokens)"));
  }
  if (r.last < 0 || r.last >= n) {
    return FieldError(doc_id, path + ".last",
                      absl::StrCat("token index ", r.last, " out of range (",
                                   n, " tokens)"));
  }
  if (r.first > r.last) {
    return FieldError(doc_id, path, "first > last");
  }
  return absl::OkStatus();
}

std::optional<EntityCategory> ParseCategory(std::string_view s) {
  if (s == "Person") return EntityCategory::kPerson;
  if (s == "Occupation") return EntityCategory::kOccupation;
  if (s == "Other") return EntityCategory::kOther;
  return std::nullopt;
}

absl::StatusOr<Annotation> ParseOne(const json& obj,
                                    std::vector<AnnotationWarning>& warnings,
                                    int line) {
  if (!obj.is_object()) {
    return absl::InvalidArgumentError(
        absl::StrCat("line ", line, ": expected a JSON object"));
  }
  Annotation ann;
  auto doc_id_it = obj.find("doc_id");
  if (doc_id_it == obj.end() || !doc_id_it->is_string()) {
    return absl::InvalidArgumentError(
        absl::StrCat("line ", line, ": doc_id missing or not a string"));
  }
  ann.doc_id = doc_id_it->get<std::string>();
  const std::string& id = ann.doc_id;

  auto tokens = GetArray(obj, "tokens", id);
  if (!tokens.ok()) return tokens.status();
  for (size_t i = 0; i < (*tokens)->size(); ++i) {
    const json& t = (**tokens)[i];
    const std::string path = absl::StrCat("tokens[", i, "]");
    if (!t.is_object()) return FieldError(id, path, "expected object");
    Token tok;
    auto index = GetInt(t, "i", id, path);
    if (!index.ok()) return index.status();
    auto text = GetString(t, "text", id, path);
    if (!text.ok()) return text.status();
    auto pos = GetString(t, "pos", id, path);
    if (!pos.ok()) return pos.status();
    auto start = GetInt(t, "start", id, path);
    if (!start.ok()) return start.status();
    auto end = GetInt(t, "end", id, path);
    if (!end.ok()) return end.status();
    tok.index = *index;
    tok.text = std::move(*text);
    if (auto p = ParsePos(*pos); p.has_value()) {
      tok.pos = *p;
    } else {
      tok.pos = Pos::kOther;
      warnings.push_back(
          {id, absl::StrCat(path, ".pos: unknown tag '", *pos,
                            "' mapped to OTHER")});
    }
    tok.start = *start;
    tok.end = *end;
    if (auto f = t.find("fine"); f != t.end() && !f->is_null()) {
      if (!f->is_string()) return FieldError(id, path + ".fine", "expected string");
      tok.fine = f->get<std::string>();
    }
    ann.tokens.push_back(std::move(tok));
  }

  auto entities = GetArray(obj, "entities", id);
  if (!entities.ok()) return entities.status();
  for (size_t i = 0; i < (*entities)->size(); ++i) {
    const json& e = (**entities)[i];
    const std::string path = absl::StrCat("entities[", i, "]");
    auto range = GetRange(e, id, path);
    if (!range.ok()) return range.status();
    auto cat = GetString(e, "cat", id, path);
    if (!cat.ok()) return cat.status();
    auto category = ParseCategory(*cat);
    if (!category.has_value()) {
      return FieldError(id, path + ".cat",
                        absl::StrCat("unknown category '", *cat, "'"));
    }
    ann.entities.push_back({*range, *category, ""});
  }

  auto chains = GetArray(obj, "chains", id);
  if (!chains.ok()) return chains.status();
  for (size_t c = 0; c < (*chains)->size(); ++c) {
    const json& chain = (**chains)[c];
    const std::string cpath = absl::StrCat("chains[", c, "]");
    if (!chain.is_array()) return FieldError(id, cpath, "expected array");
    CorefChain out;
    for (size_t m = 0; m < chain.size(); ++m) {
      auto range = GetRange(chain[m], id, absl::StrCat(cpath, "[", m, "]"));
      if (!range.ok()) return range.status();
      out.mentions.push_back({*range, ""});
    }
    ann.chains.push_back(std::move(out));
  }

  auto edges = GetArray(obj, "edges", id);
  if (!edges.ok()) return edges.status();
  for (size_t i = 0; i < (*edges)->size(); ++i) {
    const json& e = (**edges)[i];
    const std::string path = absl::StrCat("edges[", i, "]");
    if (!e.is_object()) return FieldError(id, path, "expected object");
    auto head = GetInt(e, "head", id, path);
    if (!head.ok()) return head.status();
    auto dep = GetInt(e, "dep", id, path);
    if (!dep.ok()) return dep.status();
    auto label = GetString(e, "label", id, path);
    if (!label.ok()) return label.status();
    ann.edges.push_back({*head, *dep, std::move(*label)});
  }

  if (absl::Status s = ValidateAnnotation(ann); !s.ok()) return s;

  for (CorefChain& chain : ann.chains) {
    std::stable_sort(chain.mentions.begin(), chain.mentions.end(),
                     [](const Mention& a, const Mention& b) {
                       return a.range < b.range;
                     });
  }
  return ann;
}

}  // namespace

std::string_view PosName(Pos pos) {
  switch (pos) {
    case Pos::kPropn:
      return "PROPN";
    case Pos::kNoun:
      return "NOUN";
    case Pos::kPron:
      return "PRON";
    case Pos::kVerb:
      return "VERB";
    case Pos::kDet:
      return "DET";
    case Pos::kAdp:
      return "ADP";
    case Pos::kAdj:
      return "ADJ";
    case Pos::kPunct:
      return "PUNCT";
    case Pos::kOther:
      return "OTHER";
  }
  return "OTHER";
}

std::optional<Pos> ParsePos(std::string_view name) {
  for (Pos p : {Pos::kPropn, Pos::kNoun, Pos::kPron, Pos::kVerb, Pos::kDet,
                Pos::kAdp, Pos::kAdj, Pos::kPunct, Pos::kOther}) {
    if (PosName(p) == name) return p;
  }
  return std::nullopt;
}

std::string_view EntityCategoryName(EntityCategory category) {
  switch (category) {
    case EntityCategory::kPerson:
      return "Person";
    case EntityCategory::kOccupation:
      return "Occupation";
    case EntityCategory::kOther:
      return "Other";
  }
  return "Other";
}

std::string_view Annotation::Surface(const TokenRange& range) const {
  if (!bound || tokens.empty()) return {};
  const size_t begin = tokens[range.first].byte_begin;
  const size_t end = tokens[range.last].byte_end;
  return std::string_view(text).substr(begin, end - begin);
}

absl::Status ValidateAnnotation(const Annotation& ann) {
  const std::string& id = ann.doc_id;
  const size_t n = ann.tokens.size();
  int prev_end = 0;
  for (size_t i = 0; i < n; ++i) {
    const Token& t = ann.tokens[i];
    const std::string path = absl::StrCat("tokens[", i, "]");
    if (t.index != static_cast<int>(i)) {
      return FieldError(id, path + ".i",
                        absl::StrCat("expected ", i, ", found ", t.index));
    }
    if (t.start < 0 || t.end < t.start) {
      return FieldError(id, path, "invalid span");
    }
    if (t.start < prev_end) {
      return FieldError(id, path + ".start", "overlaps previous token");
    }
    prev_end = t.end;
  }
  for (size_t i = 0; i < ann.entities.size(); ++i) {
    if (absl::Status s = CheckRange(ann.entities[i].range, n, id,
                                    absl::StrCat("entities[", i, "]"));
        !s.ok()) {
      return s;
    }
  }
  for (size_t c = 0; c < ann.chains.size(); ++c) {
    const auto& mentions = ann.chains[c].mentions;
    if (mentions.empty()) {
      return FieldError(id, absl::StrCat("chains[", c, "]"), "empty chain");
    }
    for (size_t m = 0; m < mentions.size(); ++m) {
      if (absl::Status s = CheckRange(mentions[m].range, n, id,
                                      absl::StrCat("chains[", c, "][", m, "]"));
          !s.ok()) {
        return s;
      }
      for (size_t o = 0; o < m; ++o) {
        if (mentions[o].range.Overlaps(mentions[m].range)) {
          return FieldError(id, absl::StrCat("chains[", c, "][", m, "]"),
                            absl::StrCat("overlaps mention ", o));
        }
      }
    }
  }
  std::vector<int> head_of(n, -1);
  for (size_t i = 0; i < ann.edges.size(); ++i) {
    const DependencyEdge& e = ann.edges[i];
    const std::string path = absl::StrCat("edges[", i, "]");
    if (e.head < 0 || e.head >= static_cast<int>(n)) {
      return FieldError(id, path + ".head",
                        absl::StrCat("token index ", e.head, " out of range (",
                                     n, " tokens)"));
    }
    if (e.dependent < 0 || e.dependent >= static_cast<int>(n)) {
      return FieldError(id, path + ".dep",
                        absl::StrCat("token index ", e.dependent,
                                     " out of range (", n, " tokens)"));
    }
    if (e.head == e.dependent) return FieldError(id, path, "self loop");
    if (head_of[e.dependent] >= 0) {
      return FieldError(id, path + ".dep",
                        absl::StrCat("token ", e.dependent,
                                     " has more than one head"));
    }
    head_of[e.dependent] = e.head;
  }
  // With at most one head per token, a cycle shows up as a walk longer than
  // the token count.
  for (size_t start = 0; start < n; ++start) {
    int cur = static_cast<int>(start);
    size_t steps = 0;
    while (cur >= 0 && steps <= n) {
      cur = head_of[cur];
      ++steps;
    }
    if (steps > n) {
      return FieldError(id, "edges",
                        absl::StrCat("cycle through token ", start));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<AnnotationSet> ParseAnnotationFile(std::string_view bytes) {
  AnnotationSet set;
  for (const NumberedLine& line : SplitLines(bytes)) {
    json obj = json::parse(line.text, nullptr, false);
    if (obj.is_discarded()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line.line, ": invalid JSON"));
    }
    absl::StatusOr<Annotation> ann = ParseOne(obj, set.warnings, line.line);
    if (!ann.ok()) return ann.status();
    set.annotations.push_back(std::move(*ann));
  }
  return set;
}

absl::StatusOr<AnnotationSet> LoadAnnotationFile(
    const std::filesystem::path& path) {
  absl::StatusOr<std::string> bytes = ReadFileToString(path);
  if (!bytes.ok()) return bytes.status();
  return ParseAnnotationFile(*bytes);
}

std::string SerializeAnnotation(const Annotation& ann) {
  ordered_json obj;
  obj["doc_id"] = ann.doc_id;
  ordered_json tokens = ordered_json::array();
  for (const Token& t : ann.tokens) {
    ordered_json tok;
    tok["i"] = t.index;
    tok["text"] = t.text;
    tok["pos"] = PosName(t.pos);
    tok["start"] = t.start;
    tok["end"] = t.end;
    if (!t.fine.empty()) tok["fine"] = t.fine;
    tokens.push_back(std::move(tok));
  }
  obj["tokens"] = std::move(tokens);
  ordered_json entities = ordered_json::array();
  for (const EntitySpan& e : ann.entities) {
    ordered_json ent;
    ent["first"] = e.range.first;
    ent["last"] = e.range.last;
    ent["cat"] = EntityCategoryName(e.category);
    entities.push_back(std::move(ent));
  }
  obj["entities"] = std::move(entities);
  ordered_json chains = ordered_json::array();
  for (const CorefChain& c : ann.chains) {
    ordered_json chain = ordered_json::array();
    for (const Mention& m : c.mentions) {
      ordered_json mention;
      mention["first"] = m.range.first;
      mention["last"] = m.range.last;
      chain.push_back(std::move(mention));
    }
    chains.push_back(std::move(chain));
  }
  obj["chains"] = std::move(chains);
  ordered_json edges = ordered_json::array();
  for (const DependencyEdge& e : ann.edges) {
    ordered_json edge;
    edge["head"] = e.head;
    edge["dep"] = e.dependent;
    edge["label"] = e.label;
    edges.push_back(std::move(edge));
  }
  obj["edges"] = std::move(edges);
  return obj.dump();
}

absl::Status BindDocument(Annotation& ann, const Document& doc) {
  if (ann.doc_id != doc.id) {
    return absl::InvalidArgumentError(absl::StrCat(
        "annotation doc_id '", ann.doc_id, "' does not match document '",
        doc.id, "'"));
  }
  const std::vector<size_t> offsets = CodePointByteOffsets(doc.text);
  const int char_count = static_cast<int>(offsets.size()) - 1;
  for (size_t i = 0; i < ann.tokens.size(); ++i) {
    Token& t = ann.tokens[i];
    if (t.end > char_count) {
      return FieldError(ann.doc_id, absl::StrCat("tokens[", i, "].end"),
                        absl::StrCat("offset ", t.end, " beyond text length ",
                                     char_count));
    }
    t.byte_begin = offsets[t.start];
    t.byte_end = offsets[t.end];
    std::string_view surface = std::string_view(doc.text).substr(
        t.byte_begin, t.byte_end - t.byte_begin);
    if (surface != t.text) {
      return FieldError(ann.doc_id, absl::StrCat("tokens[", i, "]"),
                        absl::StrCat("text '", t.text, "' does not match '",
                                     std::string(surface), "' at [", t.start, ",", t.end,
                                     ")"));
    }
  }
  ann.text = doc.text;
  ann.bound = true;
  for (EntitySpan& e : ann.entities) e.text = std::string(ann.Surface(e.range));
  for (CorefChain& c : ann.chains) {
    for (Mention& m : c.mentions) m.text = std::string(ann.Surface(m.range));
  }
  return absl::OkStatus();
}

RootResult RootOf(const TokenRange& range, const Annotation& ann) {
  RootResult result;
  for (int t = range.first; t <= range.last; ++t) {
    bool has_inside_head = false;
    for (const DependencyEdge& e : ann.edges) {
      if (e.dependent == t && range.Contains(e.head)) {
        has_inside_head = true;
        break;
      }
    }
    if (has_inside_head) continue;
    if (result.token < 0) {
      result.token = t;
    } else {
      result.ambiguous = true;
    }
  }
  if (result.token < 0) result.token = range.first;
  return result;
}

std::vector<int> SentenceIds(const Annotation& ann) {
  std::vector<int> ids(ann.tokens.size(), 0);
  int sentence = 0;
  bool after_terminal = false;
  for (size_t i = 0; i < ann.tokens.size(); ++i) {
    const std::string& text = ann.tokens[i].text;
    const bool terminal =
        !text.empty() && text.find_first_not_of(".!?") == std::string::npos;
    if (after_terminal && !terminal) ++sentence;
    ids[i] = sentence;
    after_terminal = terminal;
  }
  return ids;
}

bool IsPossessivePronoun(const Annotation& ann, int token) {
  const Token& t = ann.tokens[token];
  if (t.fine == "PRP$") return true;
  if (t.fine == "PRP") return false;
  auto pos_at = [&](int i) {
    return i < static_cast<int>(ann.tokens.size()) ? ann.tokens[i].pos
                                                   : Pos::kPunct;
  };
  auto nominal = [](Pos p) { return p == Pos::kNoun || p == Pos::kPropn; };
  if (nominal(pos_at(token + 1))) return true;
  return pos_at(token + 1) == Pos::kAdj && nominal(pos_at(token + 2));
}

}  // namespace fairmt
