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


#include <random>
#include <string>

#include "fairmt/failure_detection.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fairmt {
namespace {

using ::fairmt::testing::BruteForceBtcCount;
using ::fairmt::testing::MakeTallyCase;

Mutant M(const std::string& id, const std::string& tpl, ClassLabel c) {
  Mutant m;
  m.id = id;
  m.template_id = tpl;
  m.class_label = std::move(c);
  return m;
}

constexpr SentimentLabel kPos = SentimentLabel::kPositive;
constexpr SentimentLabel kNeg = SentimentLabel::kNegative;

TEST(DetectBtcsTest, MaleFemaleDisagreement) {
  std::vector<Mutant> ms = {M("t/gender=male/name=Benedetto", "t", Gender::kMale),
                            M("t/gender=female/name=Elaisha", "t", Gender::kFemale)};
  auto btcs = DetectBtcs(ms, {{ms[0].id, kPos}, {ms[1].id, kNeg}});
  ASSERT_TRUE(btcs.ok());
  ASSERT_EQ(btcs->size(), 1u);
  const BiasUncoveringTestCase& b = (*btcs)[0];
  EXPECT_EQ(b.template_id, "t");
  EXPECT_EQ(b.a.id, ms[1].id);  // smaller id first
  EXPECT_EQ(b.a.class_key, "female");
  EXPECT_EQ(b.a.label, kNeg);
  EXPECT_EQ(b.b.class_key, "male");
}

TEST(DetectBtcsTest, SharedLabelMeansNoBtc) {
  std::vector<Mutant> ms = {M("a", "t", Gender::kMale), M("b", "t", Gender::kFemale),
                            M("c", "t", Gender::kFemale)};
  auto btcs = DetectBtcs(ms, {{"a", kNeg}, {"b", kNeg}, {"c", kNeg}});
  ASSERT_TRUE(btcs.ok());
  EXPECT_TRUE(btcs->empty());
}

TEST(DetectBtcsTest, PairsNeverCrossTemplates) {
  std::vector<Mutant> ms = {M("a", "t1", Gender::kMale), M("b", "t2", Gender::kFemale)};
  auto btcs = DetectBtcs(ms, {{"a", kPos}, {"b", kNeg}});
  ASSERT_TRUE(btcs.ok());
  EXPECT_TRUE(btcs->empty());
}

TEST(DetectBtcsTest, EightBtcExample) {
  testing::TallyCase c = MakeTallyCase({{3, 1}, {2, 2}}, 1);
  auto btcs = DetectBtcs(c.mutants, c.preds);
  ASSERT_TRUE(btcs.ok());
  EXPECT_EQ(btcs->size(), 8u);
  EXPECT_EQ(BruteForceBtcCount(c.mutants, c.preds), 8u);
  EXPECT_EQ(CountBtcs({{3, 1}, {2, 2}}), 8u);
}

TEST(CountBtcsTest, Examples) {
  EXPECT_EQ(CountBtcs({{7, 4}}), 0u);
  EXPECT_EQ(CountBtcs({{1, 1}, {1, 1}, {1, 1}}), 6u);
  EXPECT_EQ(BruteForceBtcCount(MakeTallyCase({{1, 1}, {1, 1}, {1, 1}}, 2).mutants,
                               MakeTallyCase({{1, 1}, {1, 1}, {1, 1}}, 2).preds),
            6u);
  EXPECT_EQ(CountBtcs({}), 0u);
}

TEST(DetectBtcsTest, MissingPredictionIsAnError) {
  std::vector<Mutant> ms = {M("a", "t", Gender::kMale), M("b", "t", Gender::kFemale)};
  auto btcs = DetectBtcs(ms, {{"a", kPos}});
  ASSERT_FALSE(btcs.ok());
  EXPECT_NE(btcs.status().message().find("'b'"), std::string::npos);
}

TEST(DetectBtcsTest, TalliesAndCanonicalOrder) {
  testing::TallyCase c = MakeTallyCase({{2, 3}, {4, 0}, {0, 5}}, 3);
  std::vector<BiasUncoveringTestCase> seen;
  auto summary = DetectBtcs(c.mutants, c.preds,
                            [&](const BiasUncoveringTestCase& b) { seen.push_back(b); });
  ASSERT_TRUE(summary.ok());
  EXPECT_EQ(summary->btcs, seen.size());
  EXPECT_EQ(summary->tallies.at("t").at("c1").positive, 4);
  for (size_t i = 0; i < seen.size(); ++i) {
    EXPECT_LT(seen[i].a.id, seen[i].b.id);
    if (i > 0) {
      EXPECT_LT(std::tie(seen[i - 1].a.id, seen[i - 1].b.id),
                std::tie(seen[i].a.id, seen[i].b.id));
    }
  }
}

// count_btcs, the detector and brute-force pair enumeration agree.
TEST(DetectBtcsTest, CountingOracle) {
  std::mt19937 rng(2024);
  for (int round = 0; round < 200; ++round) {
    const int k = 2 + static_cast<int>(rng() % 9);
    std::vector<ClassTally> tallies;
    for (int i = 0; i < k; ++i) {
      tallies.push_back({static_cast<int64_t>(rng() % 21),
                         static_cast<int64_t>(rng() % 21)});
    }
    testing::TallyCase c = MakeTallyCase(tallies, rng());
    uint64_t streamed = 0;
    auto summary = DetectBtcs(c.mutants, c.preds,
                              [&](const BiasUncoveringTestCase&) { ++streamed; });
    ASSERT_TRUE(summary.ok());
    const uint64_t brute = BruteForceBtcCount(c.mutants, c.preds);
    EXPECT_EQ(CountBtcs(tallies), brute);
    EXPECT_EQ(streamed, brute);
    EXPECT_EQ(summary->btcs, brute);
  }
}

TEST(BtcJsonlTest, RoundTrip) {
  testing::TallyCase c = MakeTallyCase({{2, 1}, {1, 2}}, 4);
  auto btcs = DetectBtcs(c.mutants, c.preds);
  ASSERT_TRUE(btcs.ok());
  std::string jsonl;
  for (const auto& b : *btcs) jsonl += SerializeBtc(b) + "\n";
  auto back = ParseBtcsJsonl(jsonl);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, *btcs);

  std::string preds;
  for (const auto& p : c.preds) preds += SerializePrediction(p) + "\n";
  auto pback = ParsePredictionsJsonl(preds);
  ASSERT_TRUE(pback.ok());
  EXPECT_EQ(*pback, c.preds);
  EXPECT_FALSE(ParsePredictionsJsonl("{\"id\":\"x\",\"label\":\"neutral\"}\n").ok());
}

}  // namespace
}  // namespace fairmt
