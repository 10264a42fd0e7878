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


#include <set>
#include <string>

#include "fairmt/heuristic_annotator.h"
#include "fairmt/template_engine.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fairmt {
namespace {

using ::fairmt::testing::DefaultBundle;

Annotation Annotate(const std::string& text) {
  return HeuristicAnnotate({"h", text, std::nullopt, ""}, DefaultBundle());
}

int Find(const Annotation& a, const std::string& text, int nth = 0) {
  for (const Token& t : a.tokens) {
    if (t.text == text && nth-- == 0) return t.index;
  }
  return -1;
}

std::vector<std::string> ChainTexts(const CorefChain& c) {
  std::vector<std::string> out;
  for (const Mention& m : c.mentions) out.push_back(m.text);
  return out;
}

TEST(HeuristicAnnotatorTest, MariaHasAFriend) {
  Annotation a = Annotate("Maria has a friend. She loves him.");
  const int maria = Find(a, "Maria");
  ASSERT_GE(maria, 0);
  EXPECT_EQ(a.tokens[maria].pos, Pos::kPropn);
  EXPECT_EQ(a.tokens[Find(a, "She")].pos, Pos::kPron);
  EXPECT_EQ(a.tokens[Find(a, "him")].pos, Pos::kPron);
  bool person = false;
  for (const EntitySpan& e : a.entities) {
    person |= e.category == EntityCategory::kPerson && e.text == "Maria";
  }
  EXPECT_TRUE(person);
  bool linked = false;
  for (const CorefChain& c : a.chains) {
    auto texts = ChainTexts(c);
    linked |= texts == std::vector<std::string>{"Maria", "She"};
  }
  EXPECT_TRUE(linked);
}

TEST(HeuristicAnnotatorTest, DeterminerEdgeToRootNoun) {
  Annotation a = Annotate("That guy from Blade Runner also cops a good billing");
  const int guy = Find(a, "guy");
  const int that = Find(a, "That");
  EXPECT_EQ(a.tokens[guy].pos, Pos::kNoun);
  bool det = false;
  for (const DependencyEdge& e : a.edges) {
    det |= e.head == guy && e.dependent == that && e.label == "det";
  }
  EXPECT_TRUE(det);
}

TEST(HeuristicAnnotatorTest, EmptyText) {
  Annotation a = Annotate("");
  EXPECT_TRUE(a.tokens.empty());
  EXPECT_TRUE(a.chains.empty());
  EXPECT_TRUE(a.bound);
}

TEST(HeuristicAnnotatorTest, JakeChain) {
  Annotation a = Annotate(
      testing::Figures().documents.at("fig1").text);
  ASSERT_EQ(a.chains.size(), 1u);
  EXPECT_EQ(ChainTexts(a.chains[0]),
            (std::vector<std::string>{"Jake", "his", "He"}));
}

TEST(HeuristicAnnotatorTest, CliticsAndMultiTokenNames) {
  Annotation a = Annotate("Lauren Holly was wonderful, she's funny.");
  EXPECT_GE(Find(a, "'s"), 0);
  ASSERT_FALSE(a.entities.empty());
  EXPECT_EQ(a.entities[0].text, "Lauren Holly");
  EXPECT_EQ(a.entities[0].category, EntityCategory::kPerson);
}

TEST(HeuristicAnnotatorTest, OccupationPremodifiers) {
  Annotation a = Annotate("He is a race car driver.");
  const int driver = Find(a, "driver");
  EXPECT_EQ(a.tokens[driver].pos, Pos::kNoun);
  std::set<std::string> deps;
  for (const DependencyEdge& e : a.edges) {
    if (e.head == driver) deps.insert(a.tokens[e.dependent].text);
  }
  EXPECT_TRUE(deps.contains("car"));
  EXPECT_TRUE(deps.contains("a"));
}

TEST(HeuristicAnnotatorTest, NoReachBeyondPreviousSentence) {
  Annotation a = Annotate(
      "Mary arrived. The weather was cold. The city was quiet. She smiled.");
  for (const CorefChain& c : a.chains) {
    EXPECT_NE(ChainTexts(c).front(), "Mary");
  }
}

// Structural invariants of heuristic chains on a noisy synthetic corpus:
// mentions in document order and in range, no token in two mentions, at
// least one gender pronoun per chain, and pronouns of one chain agreeing
// in gender.
TEST(HeuristicAnnotatorTest, ChainInvariants) {
  const ResourceBundle& res = DefaultBundle();
  int chains = 0;
  for (const Document& d : testing::SyntheticDocuments(300, 5, true)) {
    Annotation a = HeuristicAnnotate(d, res);
    ASSERT_TRUE(ValidateAnnotation(a).ok()) << d.id;
    std::set<int> used;
    for (const CorefChain& c : a.chains) {
      ++chains;
      ASSERT_GE(c.mentions.size(), 2u) << d.id;
      std::set<Gender> genders;
      for (size_t i = 0; i < c.mentions.size(); ++i) {
        const TokenRange& r = c.mentions[i].range;
        ASSERT_LE(r.first, r.last);
        ASSERT_LT(r.last, static_cast<int>(a.tokens.size()));
        if (i > 0) EXPECT_LT(c.mentions[i - 1].range.last, r.first) << d.id;
        for (int t = r.first; t <= r.last; ++t) {
          EXPECT_TRUE(used.insert(t).second) << d.id;
        }
        MentionKind k = ClassifyMention(c.mentions[i], a, res);
        if (k.type == MentionKind::Type::kGenderPronoun) genders.insert(k.gender);
      }
      EXPECT_EQ(genders.size(), 1u) << d.id;
    }
  }
  EXPECT_GT(chains, 100);
}

TEST(HeuristicAnnotatorTest, Deterministic) {
  for (const Document& d : testing::SyntheticDocuments(50, 9, true)) {
    EXPECT_EQ(SerializeAnnotation(HeuristicAnnotate(d, DefaultBundle())),
              SerializeAnnotation(HeuristicAnnotate(d, DefaultBundle())));
  }
}

}  // namespace
}  // namespace fairmt
