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


#include <map>
#include <string>

#include "fairmt/eec.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fairmt {
namespace {

const EmotionLexicon& Lexicon() {
  static const EmotionLexicon* lex = new EmotionLexicon(
      *LoadEmotionLexicon(std::filesystem::path(FAIRMT_DEFAULT_RESOURCES) /
                          "emotions.csv"));
  return *lex;
}

std::vector<PersonValue> SixtyPersons() {
  auto names = SelectNames(testing::DefaultBundle(), 30, "USA");
  EXPECT_TRUE(names.ok());
  return DefaultEecPersons(*names, {});
}

TEST(EecTest, ElevenTemplates) {
  const auto& ts = EecTemplates();
  ASSERT_EQ(ts.size(), 11u);
  for (const EecTemplate& t : ts) {
    EXPECT_EQ(t.emotional, t.index <= 7);
    EXPECT_EQ(t.pattern.find("<emotion>") != std::string::npos, t.emotional);
    EXPECT_NE(t.pattern.find("<person>"), std::string::npos);
  }
}

TEST(EecTest, EmotionalOnlyCounts) {
  auto r = GenerateEec(SixtyPersons(), Lexicon(), EecMode::kEmotionalOnly);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->template_ids.size(), 140u);
  EXPECT_EQ(r->mutants.size(), 8400u);
}

TEST(EecTest, PerTemplateCountsInAllMode) {
  auto r = GenerateEec(SixtyPersons(), Lexicon(), EecMode::kAll);
  ASSERT_TRUE(r.ok());
  std::map<std::string, int> per_index;
  for (const Mutant& m : r->mutants) {
    const std::string id = m.template_id;
    per_index[id.substr(0, id.find('/'))]++;
  }
  for (int i = 1; i <= 11; ++i) {
    EXPECT_EQ(per_index["eec-" + std::to_string(i)], i <= 7 ? 1200 : 60) << i;
  }
  EXPECT_EQ(r->template_ids.size(), 144u);
}

TEST(EecTest, SentenceForms) {
  std::vector<PersonValue> persons = {{"Amy", Gender::kFemale},
                                      {"my son", Gender::kMale}};
  auto r = GenerateEec(persons, Lexicon(), EecMode::kAll);
  ASSERT_TRUE(r.ok());
  std::map<std::string, std::string> text;
  for (const Mutant& m : r->mutants) text[m.id] = m.text;
  EXPECT_EQ(text.at("eec-1/angry/gender=female/person=Amy"), "Amy feels angry.");
  EXPECT_EQ(text.at("eec-5/angry/gender=female/person=Amy"),
            "Amy found herself in an angry situation.");
  EXPECT_EQ(text.at("eec-5/sad/gender=male/person=my son"),
            "My son found himself in a sad situation.");
  EXPECT_EQ(text.at("eec-3/glad/gender=male/person=my son"),
            "I made my son feel glad.");
  EXPECT_EQ(text.at("eec-11/gender=female/person=Amy"), "Amy has two children.");
}

TEST(EecTest, LexiconValidation) {
  EmotionLexicon lex = Lexicon();
  EXPECT_TRUE(ValidateEmotionLexicon(lex).ok());
  lex[0].words.pop_back();
  EXPECT_FALSE(ValidateEmotionLexicon(lex).ok());
  lex = Lexicon();
  lex[1].words[0] = lex[0].words[0];
  EXPECT_FALSE(ValidateEmotionLexicon(lex).ok());
  EXPECT_FALSE(GenerateEec({}, Lexicon(), EecMode::kAll).ok());
}

TEST(EecTest, NounPhrasesLoad) {
  auto phrases = LoadNounPhrases(std::filesystem::path(FAIRMT_DEFAULT_RESOURCES) /
                                 "eec_noun_phrases.csv");
  ASSERT_TRUE(phrases.ok()) << phrases.status();
  EXPECT_EQ(phrases->size(), 12u);
}

}  // namespace
}  // namespace fairmt
