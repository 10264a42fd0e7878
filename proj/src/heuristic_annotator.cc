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

#include "fairmt/heuristic_annotator.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string_view>
#include <unordered_set>

#include "fairmt/utf8.h"

namespace fairmt {
namespace {

using WordSet = std::unordered_set<std::string_view>;

const WordSet& Determiners() {
  static const WordSet kSet = {"a",     "an",    "the",  "this", "that",
                               "these", "those", "every", "each", "another",
                               "some",  "any",   "no",   "all",  "both"};
  return kSet;
}

const WordSet& Pronouns() {
  static const WordSet kSet = {
      "i",       "me",      "my",       "mine",   "myself",   "you",
      "your",    "yours",   "yourself", "he",     "him",      "his",
      "himself", "she",     "her",      "hers",   "herself",  "it",
      "its",     "itself",  "we",       "us",     "our",      "ours",
      "ourselves", "they",  "them",     "their",  "theirs",   "themselves",
      "who",     "whom",    "whose",    "which",  "what",     "someone",
      "anyone",  "everyone", "nobody",  "something", "anything", "everything",
      "nothing"};
  return kSet;
}

const WordSet& Adpositions() {
  static const WordSet kSet = {
      "of",     "in",      "on",      "at",     "from",    "with",
      "by",     "for",     "to",      "about",  "as",      "into",
      "during", "over",    "under",   "after",  "before",  "through",
      "between", "without", "against", "among", "around",  "like",
      "across", "behind",  "beyond",  "near",   "since",   "until",
      "upon",   "within",  "toward",  "towards", "despite", "throughout"};
  return kSet;
}

const WordSet& Verbs() {
  static const WordSet kSet = {
      "is",     "was",    "are",    "were",   "be",     "been",   "being",
      "am",     "has",    "have",   "had",    "do",     "does",   "did",
      "will",   "would",  "can",    "could",  "should", "may",    "might",
      "must",   "shall",  "get",    "gets",   "got",    "make",   "makes",
      "made",   "go",     "goes",   "went",   "gone",   "see",    "sees",
      "saw",    "seen",   "seem",   "seems",  "look",   "looks",  "looked",
      "love",   "loves",  "loved",  "like",   "likes",  "liked",  "hate",
      "hates",  "hated",  "play",   "plays",  "played", "give",   "gives",
      "gave",   "given",  "take",   "takes",  "took",   "taken",  "say",
      "says",   "said",   "know",   "knows",  "knew",   "think",  "thinks",
      "thought", "feel",  "feels",  "felt",   "find",   "finds",  "found",
      "want",   "wants",  "wanted", "tell",   "tells",  "told",   "come",
      "comes",  "came",   "enjoy",  "enjoys", "enjoyed", "watch", "watches",
      "watched", "rent",  "buy",    "relate", "realize", "enters", "turns",
      "steals", "stole",  "acts",   "acted",  "works",  "worked", "helps",
      "helped", "becomes", "became", "keeps", "kept",   "leaves", "left",
      "believe", "recommend", "recommended", "deserves", "deserved",
      "lives",  "lived",  "wins",   "won",    "shows",  "showed", "starts"};
  return kSet;
}

const WordSet& Adjectives() {
  static const WordSet kSet = {
      "good",    "great",   "bad",     "best",    "worst",   "better",
      "worse",   "new",     "old",     "young",   "real",    "big",
      "small",   "little",  "long",    "short",   "high",    "low",
      "funny",   "cute",    "nice",    "fine",    "sad",     "happy",
      "excellent", "terrible", "awful", "amazing", "boring", "dull",
      "slow",    "fast",    "manic",   "romantic", "mixed",  "dangerous",
      "brilliant", "superb", "poor",   "weak",    "strong",  "whole",
      "same",    "other",   "first",   "last",    "only",    "own",
      "true",    "famous",  "perfect", "believable", "wonderful",
      "beautiful", "hilarious", "stupid", "silly",  "dark",    "bright",
      "main",    "lead",    "entire",  "certain", "early",   "late",
      "strange", "simple",  "clever",  "smart",   "horrible", "lovely",
      "decent",  "solid",   "weird",   "obvious", "honest",  "kind",
      "evil",    "rich",    "famous",  "nominated", "mad"};
  return kSet;
}

const WordSet& FunctionWords() {
  static const WordSet kSet = {
      "and",   "or",    "but",    "so",    "not",   "very",  "also",
      "too",   "just",  "then",   "than",  "if",    "when",  "because",
      "while", "although", "though", "again", "never", "ever", "even",
      "still", "yet",   "there",  "here",  "where", "how",   "why",
      "well",  "really", "quite", "rather", "almost", "always", "often",
      "once",  "out",   "up",     "down",  "off",   "away",  "back",
      "yes",   "oh",    "however", "whether", "either", "neither", "nor",
      "much",  "more",  "most",   "less",  "least", "already", "soon",
      "now",   "only",  "maybe",  "perhaps", "please", "n't", "'s", "to"};
  return kSet;
}

const WordSet& GenderPronouns() {
  static const WordSet kSet = {"he",  "him", "his",    "himself",
                               "she", "her", "herself"};
  return kSet;
}

bool IsWordChar(char32_t cp) {
  if (cp < 0x80) return std::isalnum(static_cast<int>(cp)) != 0;
  // General punctuation and typographic quotes are not word characters.
  if (cp >= 0x2000 && cp <= 0x206F) return false;
  if (cp == 0x00AB || cp == 0x00BB || cp == 0x00A0) return false;
  return true;
}

bool IsApostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

bool IsSpace(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v' || cp == 0x00A0;
}

bool IsTerminal(char32_t cp) { return cp == '.' || cp == '!' || cp == '?'; }

struct RawToken {
  int start = 0;  // code points
  int end = 0;
};

// Tokenizes `cps` (decoded code points) into code-point spans.
std::vector<RawToken> Tokenize(const std::u32string& cps) {
  std::vector<RawToken> out;
  const int n = static_cast<int>(cps.size());
  int i = 0;
  while (i < n) {
    const char32_t c = cps[i];
    if (IsSpace(c)) {
      ++i;
      continue;
    }
    if (IsWordChar(c)) {
      int j = i + 1;
      for (;;) {
        if (j < n && IsWordChar(cps[j])) {
          ++j;
          continue;
        }
        // Joiners kept inside a word: hyphen and apostrophe between word
        // characters, a period between digits.
        if (j + 1 < n && IsWordChar(cps[j + 1]) &&
            (cps[j] == '-' || IsApostrophe(cps[j]) ||
             (cps[j] == '.' && cps[j - 1] < 0x80 &&
              std::isdigit(static_cast<int>(cps[j - 1])) && cps[j + 1] < 0x80 &&
              std::isdigit(static_cast<int>(cps[j + 1]))))) {
          j += 2;
          continue;
        }
        break;
      }
      // Split clitics: n't, 's, 're, 'll, 've, 'd, 'm.
      std::string lower;
      for (int k = i; k < j; ++k) {
        lower.push_back(cps[k] < 0x80
                            ? static_cast<char>(std::tolower(static_cast<int>(cps[k])))
                            : IsApostrophe(cps[k]) ? '\'' : '#');
      }
      int split = -1;
      const int len = j - i;
      if (len > 3 && lower.ends_with("n't")) {
        split = j - 3;
      } else {
        const size_t apos = lower.rfind('\'');
        if (apos != std::string::npos && apos > 0) {
          const std::string suffix = lower.substr(apos + 1);
          if (suffix == "s" || suffix == "re" || suffix == "ll" ||
              suffix == "ve" || suffix == "d" || suffix == "m") {
            split = i + static_cast<int>(apos);
          }
        }
      }
      if (split > i) {
        out.push_back({i, split});
        out.push_back({split, j});
      } else {
        out.push_back({i, j});
      }
      i = j;
      continue;
    }
    // Punctuation: runs of sentence terminals stay together.
    int j = i + 1;
    if (IsTerminal(c)) {
      while (j < n && IsTerminal(cps[j])) ++j;
    }
    out.push_back({i, j});
    i = j;
  }
  return out;
}

bool AllPunct(std::string_view s) {
  size_t pos = 0;
  while (pos < s.size()) {
    const char32_t cp = DecodeUtf8(s, pos);
    if (IsWordChar(cp)) return false;
  }
  return !s.empty();
}

bool HasAdjectiveSuffix(std::string_view w) {
  if (w.size() <= 5) return false;
  for (std::string_view suffix :
       {"ful", "ous", "ive", "able", "ible", "less", "ical"}) {
    if (w.ends_with(suffix)) return true;
  }
  return false;
}

Pos LexicalPos(const std::string& text, const std::string& lower,
               bool sentence_initial, const ResourceBundle& res) {
  if (AllPunct(text)) return Pos::kPunct;
  if (StartsWithAsciiUpper(text) && res.IsKnownName(text)) return Pos::kPropn;
  if (res.GenderNounGender(lower).has_value() || res.IsOccupation(lower) ||
      res.IsExcludedOccupation(lower)) {
    return Pos::kNoun;
  }
  const bool capitalized = StartsWithAsciiUpper(text);
  if (capitalized && !sentence_initial && lower != "i") return Pos::kPropn;
  if (Pronouns().contains(lower)) return Pos::kPron;
  if (Determiners().contains(lower)) return Pos::kDet;
  if (Adpositions().contains(lower)) return Pos::kAdp;
  if (FunctionWords().contains(lower)) return Pos::kOther;
  if (Verbs().contains(lower)) return Pos::kVerb;
  if (lower == "'re" || lower == "'ll" || lower == "'ve" || lower == "'d" ||
      lower == "'m") {
    return Pos::kVerb;
  }
  if (Adjectives().contains(lower) || HasAdjectiveSuffix(lower)) return Pos::kAdj;
  if (std::isdigit(static_cast<unsigned char>(lower[0]))) return Pos::kOther;
  if (lower.size() > 3 && lower.ends_with("ly")) return Pos::kOther;
  if (lower.size() > 4 && lower.ends_with("ed")) return Pos::kVerb;
  if (lower.size() > 5 && lower.ends_with("ing")) return Pos::kVerb;
  return Pos::kNoun;
}

// Lower-cased text with the typographic apostrophe folded to ASCII.
std::string LookupForm(std::string_view text) {
  std::string out = AsciiLower(text);
  for (size_t pos; (pos = out.find("\xE2\x80\x99")) != std::string::npos;) {
    out.replace(pos, 3, "'");
  }
  return out;
}

struct Antecedent {
  TokenRange range;
  std::optional<Gender> gender;  // nullopt until a pronoun fixes it
  std::vector<TokenRange> pronouns;
};

}  // namespace

Annotation HeuristicAnnotate(const Document& doc, const ResourceBundle& res) {
  Annotation ann;
  ann.doc_id = doc.id;

  std::u32string cps;
  {
    size_t pos = 0;
    while (pos < doc.text.size()) cps.push_back(DecodeUtf8(doc.text, pos));
  }
  const std::vector<size_t> offsets = CodePointByteOffsets(doc.text);
  const std::vector<RawToken> raw = Tokenize(cps);

  std::vector<std::string> lower(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    Token t;
    t.index = static_cast<int>(i);
    t.start = raw[i].start;
    t.end = raw[i].end;
    t.byte_begin = offsets[t.start];
    t.byte_end = offsets[t.end];
    t.text = doc.text.substr(t.byte_begin, t.byte_end - t.byte_begin);
    lower[i] = LookupForm(t.text);
    ann.tokens.push_back(std::move(t));
  }
  ann.text = doc.text;
  ann.bound = true;

  // Pass 1: lexical tags.
  const size_t n = ann.tokens.size();
  {
    bool sentence_initial = true;
    for (size_t i = 0; i < n; ++i) {
      Token& t = ann.tokens[i];
      t.pos = LexicalPos(t.text, lower[i], sentence_initial, res);
      if (t.pos == Pos::kPunct) {
        sentence_initial = sentence_initial ||
                           t.text.find_first_not_of(".!?") == std::string::npos;
      } else {
        sentence_initial = false;
      }
    }
  }
  auto pos_at = [&](size_t i) { return i < n ? ann.tokens[i].pos : Pos::kPunct; };

  // Pass 2: context fixes.
  for (size_t i = 0; i < n; ++i) {
    Token& t = ann.tokens[i];
    const std::string& w = lower[i];
    if ((w == "that" || w == "this" || w == "these" || w == "those") &&
        t.pos == Pos::kDet && pos_at(i + 1) != Pos::kNoun &&
        pos_at(i + 1) != Pos::kAdj) {
      t.pos = Pos::kOther;
    }
    if (t.pos == Pos::kVerb && i > 0 && !Verbs().contains(w)) {
      const Pos prev = ann.tokens[i - 1].pos;
      const bool after_possessive =
          prev == Pos::kPron &&
          (lower[i - 1] == "his" || lower[i - 1] == "her" ||
           lower[i - 1] == "my" || lower[i - 1] == "your" ||
           lower[i - 1] == "our" || lower[i - 1] == "their" ||
           lower[i - 1] == "its");
      if (prev == Pos::kDet || prev == Pos::kAdj || after_possessive) {
        t.pos = pos_at(i + 1) == Pos::kNoun ? Pos::kAdj : Pos::kNoun;
      }
    }
  }

  // Entities.
  std::vector<bool> in_person(n, false);
  for (size_t i = 0; i < n; ++i) {
    const Token& t = ann.tokens[i];
    if (in_person[i] || !StartsWithAsciiUpper(t.text) ||
        !res.IsKnownName(t.text)) {
      continue;
    }
    size_t last = i;
    while (last + 1 < n && StartsWithAsciiUpper(ann.tokens[last + 1].text) &&
           !AllPunct(ann.tokens[last + 1].text) &&
           (ann.tokens[last + 1].pos == Pos::kPropn ||
            ann.tokens[last + 1].pos == Pos::kNoun)) {
      ++last;
    }
    for (size_t k = i; k <= last; ++k) {
      ann.tokens[k].pos = Pos::kPropn;
      in_person[k] = true;
    }
    ann.entities.push_back({TokenRange{static_cast<int>(i),
                                       static_cast<int>(last)},
                            EntityCategory::kPerson, ""});
  }
  for (size_t i = 0; i < n; ++i) {
    if (!in_person[i] && ann.tokens[i].pos == Pos::kNoun &&
        res.IsOccupation(lower[i])) {
      ann.entities.push_back({TokenRange{static_cast<int>(i),
                                         static_cast<int>(i)},
                              EntityCategory::kOccupation, ""});
    }
  }
  std::sort(ann.entities.begin(), ann.entities.end(),
            [](const EntitySpan& a, const EntitySpan& b) {
              return a.range < b.range;
            });

  // Noun-phrase edges. A head is the last token of a nominal run.
  std::vector<int> np_start(n, -1);
  for (size_t h = 0; h < n; ++h) {
    const Pos p = ann.tokens[h].pos;
    if (p != Pos::kNoun && p != Pos::kPropn) continue;
    if (pos_at(h + 1) == Pos::kNoun || pos_at(h + 1) == Pos::kPropn) continue;
    int j = static_cast<int>(h) - 1;
    while (j >= 0) {
      const Pos q = ann.tokens[j].pos;
      if (q == Pos::kAdj) {
        ann.edges.push_back({static_cast<int>(h), j, "amod"});
      } else if (q == Pos::kNoun || q == Pos::kPropn) {
        // A person name is its own phrase unless the head belongs to it.
        if (in_person[j] != in_person[h]) break;
        ann.edges.push_back({static_cast<int>(h), j, "compound"});
      } else {
        break;
      }
      --j;
    }
    if (j >= 0 && ann.tokens[j].pos == Pos::kDet) {
      ann.edges.push_back({static_cast<int>(h), j, "det"});
      --j;
    }
    np_start[h] = j + 1;
  }
  std::sort(ann.edges.begin(), ann.edges.end(),
            [](const DependencyEdge& a, const DependencyEdge& b) {
              return a.dependent < b.dependent;
            });

  // Coreference.
  const std::vector<int> sentence = SentenceIds(ann);
  std::vector<Antecedent> antecedents;
  for (const EntitySpan& e : ann.entities) {
    if (e.category != EntityCategory::kPerson) continue;
    antecedents.push_back(
        {e.range, res.NameGender(ann.tokens[e.range.first].text), {}});
  }
  for (size_t h = 0; h < n; ++h) {
    if (ann.tokens[h].pos != Pos::kNoun || in_person[h]) continue;
    const std::optional<Gender> g = res.GenderNounGender(lower[h]);
    if (!g.has_value()) continue;
    const int first = np_start[h] >= 0 ? np_start[h] : static_cast<int>(h);
    antecedents.push_back({TokenRange{first, static_cast<int>(h)}, g, {}});
  }
  std::sort(antecedents.begin(), antecedents.end(),
            [](const Antecedent& a, const Antecedent& b) {
              return a.range < b.range;
            });

  for (size_t p = 0; p < n; ++p) {
    if (ann.tokens[p].pos != Pos::kPron || !GenderPronouns().contains(lower[p])) {
      continue;
    }
    const Gender pg = (lower[p] == "she" || lower[p] == "her" ||
                       lower[p] == "herself")
                          ? Gender::kFemale
                          : Gender::kMale;
    int best = -1;
    int best_end = -1;
    for (size_t a = 0; a < antecedents.size(); ++a) {
      const Antecedent& ant = antecedents[a];
      if (ant.gender.has_value() && *ant.gender != pg) continue;
      // Most recent mention of this entity before the pronoun.
      int end = ant.range.last < static_cast<int>(p) ? ant.range.last : -1;
      for (const TokenRange& r : ant.pronouns) {
        if (r.last < static_cast<int>(p)) end = std::max(end, r.last);
      }
      if (end < 0 || sentence[p] - sentence[end] > 1) continue;
      if (end > best_end) {
        best_end = end;
        best = static_cast<int>(a);
      }
    }
    if (best < 0) continue;
    antecedents[best].gender = pg;
    antecedents[best].pronouns.push_back(
        TokenRange{static_cast<int>(p), static_cast<int>(p)});
  }
  for (const Antecedent& ant : antecedents) {
    if (ant.pronouns.empty()) continue;
    CorefChain chain;
    chain.mentions.push_back({ant.range, ""});
    for (const TokenRange& r : ant.pronouns) chain.mentions.push_back({r, ""});
    std::sort(chain.mentions.begin(), chain.mentions.end(),
              [](const Mention& a, const Mention& b) { return a.range < b.range; });
    ann.chains.push_back(std::move(chain));
  }

  for (EntitySpan& e : ann.entities) e.text = std::string(ann.Surface(e.range));
  for (CorefChain& c : ann.chains) {
    for (Mention& m : c.mentions) m.text = std::string(ann.Surface(m.range));
  }
  return ann;
}

}  // namespace fairmt
