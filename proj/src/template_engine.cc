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

#include "fairmt/template_engine.h"

#include <algorithm>
#include <set>
#include <string>

#include "absl/strings/str_cat.h"
#include "fairmt/utf8.h"

namespace fairmt {
namespace {

// Holds either a reference to a caller's bound annotation or a bound copy.
class BoundAnnotation {
 public:
  static absl::StatusOr<BoundAnnotation> Make(const Document& doc,
                                              const Annotation& ann) {
    BoundAnnotation out;
    if (ann.bound && ann.doc_id == doc.id && ann.text == doc.text) {
      out.ptr_ = &ann;
      return out;
    }
    out.copy_ = ann;
    if (absl::Status s = BindDocument(*out.copy_, doc); !s.ok()) return s;
    return out;
  }

  const Annotation& get() const { return copy_.has_value() ? *copy_ : *ptr_; }

 private:
  const Annotation* ptr_ = nullptr;
  std::optional<Annotation> copy_;
};

absl::Status CheckText(const Document& doc) {
  if (doc.text.find("\xE2\x9F\xA8") != std::string::npos ||
      doc.text.find("\xE2\x9F\xA9") != std::string::npos) {
    return absl::InvalidArgumentError(
        "text already contains placeholder brackets");
  }
  return absl::OkStatus();
}

absl::Status CheckSingleSentence(const CorefChain& chain,
                                 const std::vector<int>& sentence) {
  for (const Mention& m : chain.mentions) {
    if (sentence[m.range.first] != sentence[m.range.last]) {
      return absl::InvalidArgumentError(absl::StrCat(
          "mention [", m.range.first, ",", m.range.last,
          "] crosses a sentence boundary"));
    }
  }
  return absl::OkStatus();
}

Replacement Span(const Annotation& ann, int first, int last,
                 PlaceholderKind kind) {
  return Replacement{ann.tokens[first].byte_begin, ann.tokens[last].byte_end,
                     kind};
}

absl::StatusOr<std::optional<Template>> Finish(
    const Document& doc, Characteristic c, std::vector<Replacement> reps) {
  if (reps.empty()) return std::nullopt;
  absl::StatusOr<std::vector<Segment>> segments =
      BuildSegments(doc.text, std::move(reps));
  if (!segments.ok()) return segments.status();
  Template t;
  t.source_doc = doc.id;
  t.id = absl::StrCat(doc.id, "#", std::string(CharacteristicName(c)));
  t.characteristic = c;
  t.segments = *std::move(segments);
  if (absl::Status s = ValidateTemplate(t); !s.ok()) return s;
  return t;
}

// Tokens whose amod/compound path leads to `head`.
std::set<int> Premodifiers(const Annotation& ann, int head) {
  std::set<int> out;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const DependencyEdge& e : ann.edges) {
      if (e.label != "amod" && e.label != "compound") continue;
      if ((e.head == head || out.contains(e.head)) &&
          !out.contains(e.dependent)) {
        out.insert(e.dependent);
        grew = true;
      }
    }
  }
  return out;
}

// Occupation slot over the premodifier run plus the token, and a Det slot
// for an "a"/"an" right before it.
void OccupationReplacements(const Annotation& ann, int token,
                            std::vector<Replacement>& out) {
  const std::set<int> premods = Premodifiers(ann, token);
  int first = token;
  while (first - 1 >= 0 && premods.contains(first - 1)) --first;
  out.push_back(Span(ann, first, token, PlaceholderKind{SlotKind::kOccupation}));
  if (first - 1 >= 0) {
    const std::string det = AsciiLower(ann.tokens[first - 1].text);
    if (det == "a" || det == "an") {
      out.push_back(
          Span(ann, first - 1, first - 1, PlaceholderKind{SlotKind::kDet}));
    }
  }
}

}  // namespace

MentionKind ClassifyMention(const Mention& mention, const Annotation& ann,
                            const ResourceBundle& res) {
  MentionKind out;
  for (const EntitySpan& e : ann.entities) {
    if (e.category == EntityCategory::kPerson && e.range == mention.range) {
      out.type = MentionKind::Type::kPersonName;
      return out;
    }
  }
  if (mention.range.size() == 1) {
    const int token = mention.range.first;
    const std::string lower = AsciiLower(ann.tokens[token].text);
    std::vector<std::pair<Gender, PronounId>> matches;
    for (const auto& [key, surface] : res.pronoun_table) {
      if (surface == lower) matches.push_back(key);
    }
    if (!matches.empty()) {
      out.type = MentionKind::Type::kGenderPronoun;
      out.gender = matches.front().first;
      out.pronoun = matches.front().second;
      if (matches.size() > 1) {
        const PronounId want = IsPossessivePronoun(ann, token) ? PronounId::kPp
                                                               : PronounId::kOpp;
        for (const auto& [g, id] : matches) {
          if (id == want) out.pronoun = id;
        }
      }
      return out;
    }
  }
  const RootResult root = RootOf(mention.range, ann);
  if (root.token >= 0 && ann.tokens[root.token].pos == Pos::kNoun) {
    std::optional<Gender> g =
        res.GenderNounGender(AsciiLower(ann.tokens[root.token].text));
    if (g.has_value()) {
      out.type = MentionKind::Type::kGenderNounPhrase;
      out.gender = *g;
      out.root_token = root.token;
      return out;
    }
  }
  return out;
}

std::optional<CorefChain> FilterCorefs(const std::vector<CorefChain>& chains,
                                       const Annotation& ann,
                                       const ResourceBundle& res) {
  const CorefChain* person_chain = nullptr;
  bool all_person = false;
  for (const CorefChain& chain : chains) {
    int person = 0;
    for (const Mention& m : chain.mentions) {
      if (ClassifyMention(m, ann, res).IsPerson()) ++person;
    }
    if (person == 0) continue;
    if (person_chain != nullptr) return std::nullopt;
    person_chain = &chain;
    all_person = person == static_cast<int>(chain.mentions.size());
  }
  if (person_chain == nullptr || !all_person) return std::nullopt;
  return *person_chain;
}

InferredGender InferGender(const CorefChain& chain, const Annotation& ann,
                           const ResourceBundle& res) {
  bool male = false;
  bool female = false;
  for (const Mention& m : chain.mentions) {
    const MentionKind k = ClassifyMention(m, ann, res);
    if (k.type != MentionKind::Type::kGenderPronoun) continue;
    (k.gender == Gender::kMale ? male : female) = true;
  }
  if (male == female) return InferredGender::kInconclusive;
  return male ? InferredGender::kMale : InferredGender::kFemale;
}

absl::StatusOr<std::optional<Template>> GenerateGenderTemplate(
    const Document& doc, const Annotation& input, const ResourceBundle& res) {
  if (absl::Status s = CheckText(doc); !s.ok()) return s;
  absl::StatusOr<BoundAnnotation> bound = BoundAnnotation::Make(doc, input);
  if (!bound.ok()) return bound.status();
  const Annotation& ann = bound->get();

  std::optional<CorefChain> chain = FilterCorefs(ann.chains, ann, res);
  if (!chain.has_value()) return std::nullopt;
  if (absl::Status s = CheckSingleSentence(*chain, SentenceIds(ann)); !s.ok()) {
    return s;
  }
  std::vector<Replacement> reps;
  for (const Mention& m : chain->mentions) {
    const MentionKind k = ClassifyMention(m, ann, res);
    switch (k.type) {
      case MentionKind::Type::kPersonName:
        reps.push_back(Span(ann, m.range.first, m.range.last,
                            PlaceholderKind{SlotKind::kName}));
        break;
      case MentionKind::Type::kGenderPronoun:
        reps.push_back(Span(ann, m.range.first, m.range.first,
                            PlaceholderKind{SlotKind::kPronoun, k.pronoun}));
        break;
      case MentionKind::Type::kGenderNounPhrase:
        reps.push_back(Span(ann, k.root_token, k.root_token,
                            PlaceholderKind{SlotKind::kGenderNoun}));
        break;
      case MentionKind::Type::kNotPerson:
        break;
    }
  }
  return Finish(doc, Characteristic::kGender, std::move(reps));
}

absl::StatusOr<std::optional<Template>> GenerateOccupationTemplate(
    const Document& doc, const Annotation& input, const ResourceBundle& res) {
  if (absl::Status s = CheckText(doc); !s.ok()) return s;
  absl::StatusOr<BoundAnnotation> bound = BoundAnnotation::Make(doc, input);
  if (!bound.ok()) return bound.status();
  const Annotation& ann = bound->get();

  for (const EntitySpan& e : ann.entities) {
    if (e.category != EntityCategory::kOccupation) continue;
    const int occ = RootOf(e.range, ann).token;
    if (occ < 0 || ann.tokens[occ].pos != Pos::kNoun) continue;
    const std::string word = AsciiLower(ann.tokens[occ].text);
    if (res.IsExcludedOccupation(word)) continue;

    std::vector<Replacement> reps;
    OccupationReplacements(ann, occ, reps);
    const std::vector<int> sentence = SentenceIds(ann);
    for (const CorefChain& chain : ann.chains) {
      const bool refers = std::any_of(
          chain.mentions.begin(), chain.mentions.end(),
          [&](const Mention& m) { return m.range.Contains(occ); });
      if (!refers) continue;
      if (absl::Status s = CheckSingleSentence(chain, sentence); !s.ok()) {
        return s;
      }
      for (const Mention& m : chain.mentions) {
        if (m.range.Contains(occ)) continue;
        for (int i = m.range.first; i <= m.range.last; ++i) {
          if (ann.tokens[i].pos == Pos::kNoun &&
              AsciiLower(ann.tokens[i].text) == word) {
            OccupationReplacements(ann, i, reps);
            break;
          }
        }
      }
    }
    return Finish(doc, Characteristic::kOccupation, std::move(reps));
  }
  return std::nullopt;
}

absl::StatusOr<std::optional<Template>> GenerateCountryTemplate(
    const Document& doc, const Annotation& input, const ResourceBundle& res) {
  if (absl::Status s = CheckText(doc); !s.ok()) return s;
  absl::StatusOr<BoundAnnotation> bound = BoundAnnotation::Make(doc, input);
  if (!bound.ok()) return bound.status();
  const Annotation& ann = bound->get();

  std::optional<CorefChain> chain = FilterCorefs(ann.chains, ann, res);
  if (!chain.has_value()) return std::nullopt;
  if (absl::Status s = CheckSingleSentence(*chain, SentenceIds(ann)); !s.ok()) {
    return s;
  }
  const InferredGender g = InferGender(*chain, ann, res);
  if (g == InferredGender::kInconclusive) return std::nullopt;
  const PlaceholderKind kind{g == InferredGender::kMale ? SlotKind::kMalePerson
                                                        : SlotKind::kFemalePerson};
  std::vector<Replacement> reps;
  for (const Mention& m : chain->mentions) {
    if (ClassifyMention(m, ann, res).type == MentionKind::Type::kPersonName) {
      reps.push_back(Span(ann, m.range.first, m.range.last, kind));
    }
  }
  return Finish(doc, Characteristic::kCountry, std::move(reps));
}

absl::StatusOr<std::optional<Template>> GenerateTemplate(
    Characteristic characteristic, const Document& doc, const Annotation& ann,
    const ResourceBundle& res) {
  switch (characteristic) {
    case Characteristic::kGender:
      return GenerateGenderTemplate(doc, ann, res);
    case Characteristic::kOccupation:
      return GenerateOccupationTemplate(doc, ann, res);
    case Characteristic::kCountry:
      return GenerateCountryTemplate(doc, ann, res);
  }
  return std::nullopt;
}

}  // namespace fairmt
