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

#include "fairmt/corpus.h"
#include "fairmt/csv.h"
#include "fairmt/io.h"
#include "fairmt/utf8.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fairmt {
namespace {

TEST(Utf8Test, CountsAndOffsets) {
  const std::string s = "a\xC3\xA9\xE2\x9F\xA8z";  // a é ⟨ z
  EXPECT_EQ(CodePointCount(s), 4u);
  EXPECT_EQ(CodePointByteOffsets(s), (std::vector<size_t>{0, 1, 3, 6, 7}));
}

TEST(Utf8Test, SanitizeReplacesInvalidSequences) {
  int replaced = 0;
  EXPECT_EQ(SanitizeUtf8("ok\xFF" "x\xC3", &replaced),
            "ok\xEF\xBF\xBDx\xEF\xBF\xBD");
  EXPECT_EQ(replaced, 2);
  EXPECT_EQ(SanitizeUtf8("caf\xC3\xA9"), "caf\xC3\xA9");
}

TEST(Utf8Test, Capitalization) {
  EXPECT_EQ(CapitalizeFirst("he"), "He");
  EXPECT_EQ(CapitalizeFirst(""), "");
  EXPECT_TRUE(StartsWithAsciiUpper("Jake"));
  EXPECT_FALSE(StartsWithAsciiUpper("jake"));
  EXPECT_EQ(AsciiLower("ReD"), "red");
}

TEST(CsvTest, QuotedFieldsAndErrors) {
  CsvParseResult r = ParseCsv("a,b\n\"x, y\",\"he said \"\"hi\"\"\"\n\"open,z\n");
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_EQ(r.records[1].fields,
            (std::vector<std::string>{"x, y", "he said \"hi\""}));
  EXPECT_EQ(r.errors.size(), 1u);
}

TEST(CsvTest, EscapeRoundTrips) {
  for (std::string f : {"plain", "a,b", "q\"uote", "line\nbreak", ""}) {
    CsvParseResult r = ParseCsv("h\n" + CsvEscape(f) + ",end\n");
    ASSERT_EQ(r.records.size(), 2u) << f;
    EXPECT_EQ(r.records[1].fields[0], f);
  }
}

TEST(IoTest, AtomicWriterLeavesNothingWhenNotCommitted) {
  testing::TempDir dir;
  const auto path = dir.path() / "out.jsonl";
  {
    AtomicFileWriter w(path);
    ASSERT_TRUE(w.Open().ok());
    w.Write("partial");
  }
  EXPECT_FALSE(std::filesystem::exists(path));
  {
    AtomicFileWriter w(path);
    ASSERT_TRUE(w.Open().ok());
    w.Write("done\n");
    ASSERT_TRUE(w.Commit().ok());
  }
  EXPECT_EQ(*ReadFileToString(path), "done\n");
  EXPECT_EQ(std::distance(std::filesystem::directory_iterator(dir.path()),
                          std::filesystem::directory_iterator()),
            1);
}

TEST(IoTest, SplitLinesSkipsBlanks) {
  auto lines = SplitLines("a\r\n\n  \nb");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].text, "a");
  EXPECT_EQ(lines[1].line, 4);
}

TEST(CleanTextTest, Examples) {
  EXPECT_EQ(CleanText("great <br /> movie"), "great movie");
  EXPECT_EQ(CleanText("a &amp; b"), "a & b");
  EXPECT_EQ(CleanText("no markup here"), "no markup here");
  EXPECT_EQ(CleanText("  x\t\n y  "), "x y");
  EXPECT_EQ(CleanText("&#65;&quot;"), "A\"");
}

TEST(CleanTextTest, IdempotentOnRandomMarkup) {
  const std::vector<std::string> pieces = {
      "<", ">", "&", "amp;", "lt;", "gt;", "&#60;", "b", " ", "\n", "word",
      "<br />", "&lt;i&gt;", ";", "#", "quot;", "\xC3\xA9", "<p", "/>"};
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    const int n = static_cast<int>(rng() % 12);
    for (int k = 0; k < n; ++k) s += pieces[rng() % pieces.size()];
    const std::string once = CleanText(s);
    EXPECT_EQ(CleanText(once), once) << "input: " << s;
  }
}

TEST(CorpusTest, CsvRowsInFileOrder) {
  absl::StatusOr<Corpus> c = ParseCorpus(
      "id,text,label\nb,Second <b>one</b>,positive\na,First,negative\n"
      "c,Third,\n",
      CorpusFormat::kCsv, "t");
  ASSERT_TRUE(c.ok()) << c.status();
  ASSERT_EQ(c->documents.size(), 3u);
  EXPECT_EQ(c->documents[0].id, "b");
  EXPECT_EQ(c->documents[0].text, "Second one");
  EXPECT_EQ(c->documents[1].gold_label, SentimentLabel::kNegative);
  EXPECT_FALSE(c->documents[2].gold_label.has_value());
}

TEST(CorpusTest, JsonlMissingTextIsRejected) {
  absl::StatusOr<Corpus> c = ParseCorpus(
      "{\"id\":\"1\",\"text\":\"fine\"}\n{\"id\":\"2\"}\n"
      "{\"id\":\"3\",\"text\":\"also fine\"}\n",
      CorpusFormat::kJsonl, "t");
  ASSERT_TRUE(c.ok()) << c.status();
  EXPECT_EQ(c->documents.size(), 2u);
  ASSERT_EQ(c->rejects.size(), 1u);
  EXPECT_EQ(c->rejects[0].line, 2);
}

TEST(CorpusTest, NeutralLabelRejected) {
  absl::StatusOr<Corpus> c = ParseCorpus(
      "id,text,label\n1,meh,neutral\n2,ok,POSITIVE\n", CorpusFormat::kCsv, "t");
  ASSERT_TRUE(c.ok());
  ASSERT_EQ(c->rejects.size(), 1u);
  EXPECT_EQ(c->rejects[0].reason, "binary labels only");
  EXPECT_EQ(c->documents.size(), 1u);
}

TEST(CorpusTest, DuplicateIdNamesBothLines) {
  absl::StatusOr<Corpus> c = ParseCorpus("id,text\nx,a\ny,b\nx,c\n",
                                         CorpusFormat::kCsv, "t");
  ASSERT_FALSE(c.ok());
  EXPECT_NE(c.status().message().find("2"), std::string::npos);
  EXPECT_NE(c.status().message().find("4"), std::string::npos);
}

TEST(CorpusTest, LongDocumentTruncatedAtSentence) {
  std::string text;
  for (int i = 0; i < 30; ++i) text += "This is sentence number " + std::to_string(i) + ". ";
  absl::StatusOr<Corpus> c = ParseCorpus("id,text\n1," + text + "\n",
                                         CorpusFormat::kCsv, "t", {100});
  ASSERT_TRUE(c.ok());
  const std::string& got = c->documents[0].text;
  EXPECT_LE(CodePointCount(got), 100u);
  EXPECT_EQ(got.back(), '.');
  EXPECT_EQ(c->warnings.size(), 1u);
}

TEST(CorpusTest, Deterministic) {
  const std::string bytes = testing::SyntheticCorpusCsv(50, 3, true);
  auto a = ParseCorpus(bytes, CorpusFormat::kCsv, "t");
  auto b = ParseCorpus(bytes, CorpusFormat::kCsv, "t");
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(DocumentsToJsonl(a->documents), DocumentsToJsonl(b->documents));
}

}  // namespace
}  // namespace fairmt
