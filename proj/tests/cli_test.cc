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

#include "reqlint/cli.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "reqlint/corpus.h"

namespace reqlint {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;
using ::testing::Not;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "reqlint");
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Fixture(const char *name) { return testing::FixturePath(name); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("reqlint_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    unsetenv("REQLINT_CONFIG_DIR");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv("REQLINT_CONFIG_DIR");
  }

  std::string Path(const std::string &name) const { return (dir_ / name).string(); }

  void WriteFile(const std::string &name, const std::string &text) const {
    std::ofstream(dir_ / name) << text;
  }

  // Fixture corpus limited to `ids`.
  std::string Subset(const std::vector<std::string> &ids) const {
    std::ostringstream text;
    for (const std::string &id : ids) {
      text << RequirementToJson(testing::Example(id)).dump() << "\n";
    }
    WriteFile("subset.jsonl", text.str());
    return Path("subset.jsonl");
  }

  fs::path dir_;
};

TEST_F(CliTest, LintHuman) {
  const CliRun r = Cli({"lint", Subset({"fig4-running"})});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("fig4-running  P7  Non-atomic requirement, "
                               "Incomplete condition, Passive voice, Not "
                               "precise verb"));
  EXPECT_THAT(r.out, HasSubstr("1 requirement(s)"));
}

TEST_F(CliTest, LintJsonToFile) {
  const CliRun r = Cli({"lint", Fixture("paper_examples.jsonl"), "-o", Path("out.jsonl"),
                     "--format", "json", "-j", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto diags = ReadDiagnostics(Path("out.jsonl"));
  ASSERT_EQ(diags.size(), testing::Examples().size());
  EXPECT_EQ(diags[0].id, "fig4-running");
  EXPECT_EQ(diags[0].SmellSet().size(), 4u);
  EXPECT_EQ(diags[0].recommendation->pattern, RimayPatternId::kP7);
}

TEST_F(CliTest, LintJsonToStdout) {
  const CliRun r = Cli({"lint", Subset({"t4-C8", "t4-SR1"}), "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  std::istringstream in(r.out);
  const auto diags = ParseDiagnostics(in);
  ASSERT_EQ(diags.size(), 2u);
  EXPECT_EQ(diags[1].id, "t4-SR1");
}

TEST_F(CliTest, EvaluatePerfect) {
  ASSERT_EQ(Cli({"lint", Fixture("paper_examples.jsonl"), "-o", Path("out.jsonl"),
                 "--format", "json"})
                .code,
            kExitOk);
  for (const std::string &input :
       {Path("out.jsonl"), Fixture("paper_examples.jsonl")}) {
    const CliRun r = Cli({"evaluate", input, Fixture("gold.jsonl")});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_THAT(r.out, HasSubstr("Smell detection"));
    EXPECT_THAT(r.out, HasSubstr("Pattern suggestion"));
    EXPECT_THAT(r.out, ::testing::ContainsRegex("Overall +1\\.00 +1\\.00"));
    EXPECT_THAT(r.out, Not(HasSubstr("0.")));
  }
}

TEST_F(CliTest, EvaluateJson) {
  const CliRun r = Cli({"evaluate", Fixture("paper_examples.jsonl"),
                     Fixture("gold.jsonl"), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("\"overall\""));
}

TEST_F(CliTest, EvaluateUnknownId) {
  WriteFile("gold.jsonl", "{\"id\": \"other\", \"smells\": []}\n");
  const CliRun r = Cli({"evaluate", Subset({"t4-C1"}), Path("gold.jsonl")});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_THAT(r.err, HasSubstr("t4-C1"));
}

TEST_F(CliTest, Segments) {
  const CliRun r = Cli({"segments", Subset({"fig4-running"})});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("system_response 16-25 SR1: the input media "
                               "field must be set to SINF"));
  const CliRun j = Cli({"segments", Subset({"fig4-running"}), "--format", "json"});
  EXPECT_EQ(j.code, kExitOk);
  EXPECT_THAT(j.out, HasSubstr("\"segments\""));
}

TEST_F(CliTest, TreeQuery) {
  const CliRun r = Cli({"tquery", "SBAR < (WHADVP $+ S)", Subset({"fig6-scope-condition"})});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "fig6-scope-condition\tSBAR\t4-12\twhen System-A receives an "
            "email alert from System-B\n");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"bogus"}).code, kExitUsage);
  EXPECT_EQ(Cli({"lint"}).code, kExitUsage);
  EXPECT_EQ(Cli({"lint", Fixture("paper_examples.jsonl"), "--format", "xml"}).code,
            kExitUsage);
  const CliRun q = Cli({"tquery", "SBAR <", Fixture("paper_examples.jsonl")});
  EXPECT_EQ(q.code, kExitUsage);
  EXPECT_THAT(q.err, HasSubstr("offset"));
}

TEST_F(CliTest, DataErrors) {
  std::string rec = RequirementToJson(testing::Example("t4-C2")).dump();
  rec.replace(rec.find("\"tree\":\"(") + 9, 0, "(");
  WriteFile("bad.jsonl", rec + "\n");
  const CliRun r = Cli({"lint", Path("bad.jsonl")});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_THAT(r.err, HasSubstr("t4-C2"));
  EXPECT_THAT(r.err, HasSubstr("line 1"));

  // A path that does not exist is rejected while parsing arguments.
  EXPECT_EQ(Cli({"lint", Path("missing.jsonl")}).code, kExitUsage);
}

TEST_F(CliTest, MissingTreeWarns) {
  Json j = RequirementToJson(testing::Example("t4-C2"));
  j.erase("tree");
  WriteFile("notree.jsonl", j.dump() + "\n");
  const CliRun r = Cli({"lint", Path("notree.jsonl")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.err, HasSubstr("requirement 't4-C2': no parse tree"));
}

TEST_F(CliTest, ConfigDirectory) {
  // "want" removed from the glossary.
  WriteFile("glossary.txt", "process\n");
  const std::string corpus = Subset({"t4-C6", "fig4-running"});
  const CliRun base = Cli({"lint", corpus});
  EXPECT_THAT(base.out, HasSubstr("t4-C6  P7  Not precise verb"));

  const CliRun flag = Cli({"lint", corpus, "--config-dir", dir_.string()});
  EXPECT_THAT(flag.out, HasSubstr("t4-C6  P7  no smells"));
  EXPECT_THAT(flag.out, HasSubstr("Not precise verb"));

  setenv("REQLINT_CONFIG_DIR", dir_.c_str(), 1);
  const CliRun env = Cli({"lint", corpus});
  EXPECT_EQ(env.out, flag.out);

  unsetenv("REQLINT_CONFIG_DIR");
  EXPECT_EQ(Cli({"lint", corpus, "--glossary", Path("glossary.txt")}).out, flag.out);
}

TEST_F(CliTest, Subprocess) {
  const std::string cmd = std::string("\"") + REQLINT_CLI_PATH + "\" lint \"" +
                          Fixture("paper_examples.jsonl") + "\" --format json";
  FILE *pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), kExitOk);
  std::istringstream in(out);
  EXPECT_EQ(ParseDiagnostics(in).size(), testing::Examples().size());

  const std::string bad = std::string("\"") + REQLINT_CLI_PATH + "\" frobnicate 2>/dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), kExitUsage);
}

}  // namespace
}  // namespace reqlint
