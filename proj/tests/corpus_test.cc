// Copyright 2026 The reqlint Authors.
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

#include "reqlint/corpus.h"

#include <sstream>

#include "fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "reqlint/error.h"
#include "reqlint/pipeline.h"

namespace reqlint {
namespace {

using ::testing::HasSubstr;

const char kRecord[] =
    R"j({"id": "R1", "text": "System-A must send it", )j"
    R"j("tokens": [{"text": "System-A", "lemma": "system-a", "pos": "NNP"}, )j"
    R"j({"text": "must", "lemma": "must", "pos": "MD"}, )j"
    R"j({"text": "send", "lemma": "send", "pos": "VB"}, )j"
    R"j({"text": "it", "lemma": "it", "pos": "PRP"}], )j"
    R"j("tree": "(ROOT (S (NP (NNP System-A)) (VP (MD must) (VP (VB send) (NP (PRP it))))))", )j"
    R"j("marks": [{"kind": "line_break", "before_token": 1}]})j";

std::vector<AnnotatedRequirement> Parse(const std::string &text) {
  std::istringstream in(text);
  return ParseCorpus(in);
}

std::string ErrorOf(const std::string &text) {
  try {
    Parse(text);
  } catch (const DataError &e) {
    return e.what();
  }
  return "";
}

TEST(CorpusTest, ParsesRecord) {
  const auto corpus = Parse(std::string(kRecord) + "\n\n");
  ASSERT_EQ(corpus.size(), 1u);
  const AnnotatedRequirement &r = corpus[0];
  EXPECT_EQ(r.id, "R1");
  ASSERT_EQ(r.tokens.size(), 4u);
  EXPECT_EQ(r.tokens[2], (Token{"send", "send", "VB", 2}));
  ASSERT_TRUE(r.tree.has_value());
  EXPECT_EQ(r.marks, (std::vector<LayoutMark>{{LayoutMarkKind::kLineBreak, 1}}));
}

TEST(CorpusTest, TreeIsOptional) {
  const auto corpus = Parse(
      R"j({"id": "x", "text": "go", "tokens": [{"text": "go", "lemma": "go", "pos": "VB"}]})j");
  ASSERT_EQ(corpus.size(), 1u);
  EXPECT_FALSE(corpus[0].tree.has_value());
  EXPECT_TRUE(corpus[0].marks.empty());
}

// Shape written by the parse adapter when the parser fails: no tree, layout
// marks from bullets and line breaks.
TEST(CorpusTest, AdapterRecordWithoutTree) {
  const auto corpus = Parse(
      R"j({"id": "b1", "text": "fields: Include portfolio", "tokens": [)j"
      R"j({"text": "fields", "lemma": "field", "pos": "NNS", "index": 0}, )j"
      R"j({"text": ":", "lemma": ":", "pos": ":", "index": 1}, )j"
      R"j({"text": "Include", "lemma": "include", "pos": "VB", "index": 2}, )j"
      R"j({"text": "portfolio", "lemma": "portfolio", "pos": "NN", "index": 3}], )j"
      R"j("marks": [{"kind": "bullet", "before_token": 2}, )j"
      R"j({"kind": "line_break", "before_token": 2}]})j");
  ASSERT_EQ(corpus.size(), 1u);
  EXPECT_FALSE(corpus[0].tree.has_value());
  EXPECT_EQ(corpus[0].marks,
            (std::vector<LayoutMark>{{LayoutMarkKind::kBullet, 2},
                                     {LayoutMarkKind::kLineBreak, 2}}));
  const Json back = RequirementToJson(corpus[0]);
  EXPECT_FALSE(back.contains("tree"));
  EXPECT_EQ(back["marks"][0]["kind"], "bullet");
}

TEST(CorpusTest, WrongTokenIndex) {
  std::string rec = kRecord;
  rec.replace(rec.find("\"pos\": \"VB\"}"), 12, "\"pos\": \"VB\", \"index\": 7}");
  EXPECT_THAT(ErrorOf(rec), HasSubstr("token 2 has wrong index"));
}

TEST(CorpusTest, LeafTokenMismatch) {
  std::string rec = kRecord;
  rec.replace(rec.find("(PRP it)"), 8, "(PRP it) (NN x)");
  const std::string err = ErrorOf(rec);
  EXPECT_THAT(err, HasSubstr("R1"));
  EXPECT_THAT(err, HasSubstr("5 leaves but 4 tokens"));

  rec = kRecord;
  rec.replace(rec.find("(VB send)"), 9, "(VB sent)");
  EXPECT_THAT(ErrorOf(rec), HasSubstr("does not match token 'send'"));
}

TEST(CorpusTest, BadTreeNamesId) {
  std::string rec = kRecord;
  rec.replace(rec.find("(ROOT"), 5, "((ROOT");
  EXPECT_THAT(ErrorOf(rec), HasSubstr("requirement 'R1'"));
}

TEST(CorpusTest, DuplicateId) {
  const std::string err = ErrorOf(std::string(kRecord) + "\n" + kRecord + "\n");
  EXPECT_THAT(err, HasSubstr("line 2"));
  EXPECT_THAT(err, HasSubstr("duplicate id"));
}

TEST(CorpusTest, MalformedLinesReportLineNumber) {
  EXPECT_THAT(ErrorOf(std::string(kRecord) + "\n{\"id\": \n"),
              HasSubstr("line 2: malformed JSON"));
  EXPECT_THAT(ErrorOf("\n[1, 2]\n"), HasSubstr("line 2: expected a JSON object"));
  EXPECT_THAT(ErrorOf(R"j({"id": "a", "text": "t"})j"), HasSubstr("line 1"));
  EXPECT_THAT(ErrorOf(R"j({"id": 3, "text": "t", "tokens": []})j"),
              HasSubstr("line 1"));
  std::string rec = kRecord;
  rec.replace(rec.find("line_break"), 10, "page_break");
  EXPECT_THAT(ErrorOf(rec), HasSubstr("unknown layout mark 'page_break'"));
  rec = kRecord;
  rec.replace(rec.find("\"before_token\": 1"), 17, "\"before_token\": 9");
  EXPECT_THAT(ErrorOf(rec), HasSubstr("out of range"));
}

TEST(CorpusTest, EmptyInput) {
  EXPECT_TRUE(Parse("").empty());
  EXPECT_TRUE(Parse("\n  \n").empty());
  std::istringstream in("");
  EXPECT_TRUE(ParseGold(in).empty());
  std::istringstream in2("");
  EXPECT_TRUE(ParseDiagnostics(in2).empty());
}

TEST(CorpusTest, RoundTrip) {
  for (const AnnotatedRequirement &req : testing::Examples()) {
    const AnnotatedRequirement back =
        RequirementFromJson(Json::parse(RequirementToJson(req).dump()));
    EXPECT_EQ(back.id, req.id);
    EXPECT_EQ(back.text, req.text);
    EXPECT_EQ(back.tokens, req.tokens);
    EXPECT_EQ(back.tree, req.tree);
    EXPECT_EQ(back.marks, req.marks);
  }
}

TEST(CorpusTest, MissingFile) {
  EXPECT_THROW(ReadCorpus("/nonexistent/corpus.jsonl"), Error);
}

TEST(GoldTest, Parses) {
  std::istringstream in(
      "{\"id\": \"a\", \"smells\": [\"passive_voice\", \"non_atomic\"], "
      "\"pattern\": \"P7\"}\n"
      "{\"id\": \"b\", \"smells\": [], \"pattern\": null}\n"
      "{\"id\": \"c\", \"smells\": []}\n");
  const auto gold = ParseGold(in);
  ASSERT_EQ(gold.size(), 3u);
  EXPECT_EQ(gold[0].smells, (std::set<SmellKind>{SmellKind::kPassiveVoice,
                                                 SmellKind::kNonAtomic}));
  EXPECT_EQ(gold[0].pattern, RimayPatternId::kP7);
  EXPECT_EQ(gold[1].pattern, std::nullopt);
  EXPECT_EQ(gold[2].pattern, std::nullopt);
  for (const GroundTruthEntry &e : gold) {
    std::istringstream again(GoldToJson(e).dump());
    EXPECT_EQ(ParseGold(again)[0], e);
  }
}

TEST(GoldTest, Errors) {
  auto err = [](const std::string &text) -> std::string {
    std::istringstream in(text);
    try {
      ParseGold(in);
    } catch (const DataError &e) {
      return e.what();
    }
    return "";
  };
  EXPECT_THAT(err("{\"id\": \"a\", \"smells\": [\"bogus\"]}"),
              HasSubstr("unknown smell 'bogus'"));
  EXPECT_THAT(err("{\"id\": \"a\", \"smells\": [], \"pattern\": \"P11\"}"),
              HasSubstr("unknown pattern 'P11'"));
  EXPECT_THAT(err("{\"id\": \"a\", \"smells\": []}\n{\"id\": \"a\", \"smells\": []}"),
              HasSubstr("line 2"));
}

TEST(DiagnosticsTest, RoundTrip) {
  std::vector<Diagnostic> diags;
  for (const LintResult &r : LintCorpus(testing::Examples(), LintConfig())) {
    diags.push_back(r.diagnostic);
  }
  std::ostringstream out;
  WriteDiagnostics(diags, out);
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'),
            static_cast<long>(diags.size()));
  std::istringstream in(text);
  EXPECT_EQ(ParseDiagnostics(in), diags);
}

TEST(DiagnosticsTest, UnknownValues) {
  std::istringstream in(
      R"j({"id": "a", "segments": [{"kind": "actor", "start": 0, "end": 1, "source": "C1"}], "findings": []})j");
  EXPECT_THROW(ParseDiagnostics(in), DataError);
}

}  // namespace
}  // namespace reqlint
