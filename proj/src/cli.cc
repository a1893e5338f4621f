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

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "reqlint/catalog.h"
#include "reqlint/config.h"
#include "reqlint/corpus.h"
#include "reqlint/error.h"
#include "reqlint/eval.h"
#include "reqlint/pipeline.h"
#include "reqlint/ptb_tree.h"
#include "reqlint/tree_query.h"

namespace reqlint {
namespace {

struct Options {
  std::string corpus;
  std::string gold;
  std::string output;
  std::string query;
  std::string config_dir;
  std::string glossary;
  std::string keywords;
  unsigned jobs = 1;
  std::string format = "human";
};

// Flags: --config-dir, then the single-file overrides. Without
// --config-dir the environment variable is consulted.
LintConfig LoadConfig(const Options &o) {
  LintConfig config;
  std::string dir = o.config_dir;
  if (dir.empty()) {
    if (const char *env = std::getenv(kConfigDirEnv)) dir = env;
  }
  if (!dir.empty()) config = LintConfig::FromDirectory(dir);
  if (!o.keywords.empty()) config.keywords = Keywords::Load(o.keywords);
  if (!o.glossary.empty()) config.glossary = VerbGlossary::Load(o.glossary);
  return config;
}

std::vector<LintResult> Lint(const Options &o, std::ostream &err) {
  const auto corpus = ReadCorpus(o.corpus);
  auto results = LintCorpus(corpus, LoadConfig(o), o.jobs);
  for (const LintResult &r : results) {
    for (const std::string &w : r.warnings) err << "warning: " << w << "\n";
  }
  return results;
}

std::string SmellList(const Diagnostic &d) {
  std::string out;
  for (SmellKind k : kAllSmells) {
    if (!d.SmellSet().count(k)) continue;
    if (!out.empty()) out += ", ";
    out += DisplayName(k);
  }
  return out.empty() ? "no smells" : out;
}

std::string PatternLabel(const Diagnostic &d) {
  if (d.recommendation && d.recommendation->pattern) {
    return ToString(*d.recommendation->pattern);
  }
  return "none";
}

void PrintSummary(const std::vector<Diagnostic> &diags, std::ostream &out) {
  std::map<SmellKind, int> smells;
  std::map<std::string, int> patterns;
  for (const Diagnostic &d : diags) {
    out << d.id << "  " << PatternLabel(d) << "  " << SmellList(d) << "\n";
    for (SmellKind k : d.SmellSet()) ++smells[k];
    ++patterns[PatternLabel(d)];
  }
  out << "\n" << diags.size() << " requirement(s)\n";
  out << "Smells:\n";
  for (SmellKind k : kAllSmells) {
    if (smells[k]) out << "  " << DisplayName(k) << ": " << smells[k] << "\n";
  }
  out << "Patterns:\n";
  for (RimayPatternId p : kAllPatterns) {
    if (int n = patterns[ToString(p)]) {
      out << "  " << ToString(p) << " " << RimayPattern(p).name << ": " << n
          << "\n";
    }
  }
  if (int n = patterns["none"]) out << "  none: " << n << "\n";
}

int RunLint(const Options &o, std::ostream &out, std::ostream &err) {
  std::vector<Diagnostic> diags;
  for (LintResult &r : Lint(o, err)) diags.push_back(std::move(r.diagnostic));
  if (!o.output.empty()) WriteDiagnostics(diags, o.output);
  if (o.format == "json") {
    if (o.output.empty()) WriteDiagnostics(diags, out);
    return kExitOk;
  }
  PrintSummary(diags, out);
  return kExitOk;
}

// A diagnostics file has "segments" in its records; anything else is
// linted as a corpus.
bool LooksLikeDiagnostics(const std::string &path) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      return Json::parse(line).contains("segments");
    } catch (const Json::exception &) {
      return false;
    }
  }
  return false;
}

int RunEvaluate(const Options &o, std::ostream &out, std::ostream &err) {
  std::vector<Diagnostic> pred;
  if (LooksLikeDiagnostics(o.corpus)) {
    pred = ReadDiagnostics(o.corpus);
  } else {
    for (LintResult &r : Lint(o, err)) pred.push_back(std::move(r.diagnostic));
  }
  const auto gold = ReadGold(o.gold);
  const MetricsReport smells =
      MakeReport("Smell detection", SmellConfusion(gold, pred));
  const MetricsReport patterns =
      MakeReport("Pattern suggestion", PatternConfusion(gold, pred));
  if (o.format == "json") {
    out << Json{{"smells", ReportToJson(smells)},
                {"patterns", ReportToJson(patterns)}}
               .dump(2)
        << "\n";
  } else {
    out << RenderTable(smells) << "\n" << RenderTable(patterns);
  }
  return kExitOk;
}

std::string Words(const AnnotatedRequirement &req, TokenSpan span) {
  std::string out;
  for (std::size_t i = span.start; i < span.end && i < req.tokens.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += req.tokens[i].text;
  }
  return out;
}

int RunSegments(const Options &o, std::ostream &out, std::ostream &err) {
  const auto corpus = ReadCorpus(o.corpus);
  const auto results = LintCorpus(corpus, LoadConfig(o), o.jobs);
  for (const LintResult &r : results) {
    for (const std::string &w : r.warnings) err << "warning: " << w << "\n";
  }
  if (o.format == "json") {
    for (const LintResult &r : results) {
      const Json j = DiagnosticToJson(r.diagnostic);
      out << Json{{"id", j["id"]}, {"segments", j["segments"]}}.dump() << "\n";
    }
    return kExitOk;
  }
  for (std::size_t k = 0; k < results.size(); ++k) {
    const Diagnostic &d = results[k].diagnostic;
    out << d.id << "\n";
    for (std::size_t i = 0; i < d.segments.size(); ++i) {
      const Segment &s = d.segments[i];
      out << "  " << i + 1 << " " << ToString(s.kind);
      if (s.condition_type) out << "(" << ToString(*s.condition_type) << ")";
      if (s.slot) out << "[" << ToString(*s.slot) << "]";
      out << " " << s.span.start << "-" << s.span.end << " "
          << s.source.ToString() << ": " << Words(corpus[k], s.span) << "\n";
    }
  }
  return kExitOk;
}

int RunTquery(const Options &o, std::ostream &out, std::ostream &err) {
  std::optional<Query> query;
  try {
    query = Query::Compile(o.query);
  } catch (const ParseError &e) {
    err << "error: bad query: " << e.what() << "\n";
    return kExitUsage;
  }
  for (const AnnotatedRequirement &req : ReadCorpus(o.corpus)) {
    if (!req.tree) {
      err << "warning: requirement '" << req.id << "': no parse tree\n";
      continue;
    }
    const Tree tree = ParseTree(*req.tree);
    for (const Match &m : FindMatches(*query, tree)) {
      out << req.id << "\t" << tree.node(m.node).label << "\t" << m.span.start
          << "-" << m.span.end << "\t" << Words(req, m.span) << "\n";
    }
  }
  return kExitOk;
}

void AddConfigFlags(CLI::App *cmd, Options &o) {
  cmd->add_option("--config-dir", o.config_dir,
                  "Directory with keywords.txt and glossary.txt")
      ->check(CLI::ExistingDirectory);
  cmd->add_option("--glossary", o.glossary, "Verb glossary file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--keywords", o.keywords, "Segment keyword file")
      ->check(CLI::ExistingFile);
  cmd->add_option("-j,--jobs", o.jobs, "Worker threads (0: all cores)");
}

void AddFormat(CLI::App *cmd, Options &o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}));
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  Options o;
  CLI::App app{"Requirements smell linter", "reqlint"};
  app.require_subcommand(1);

  CLI::App *lint = app.add_subcommand("lint", "Detect smells and suggest patterns");
  lint->add_option("corpus", o.corpus, "Corpus JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  lint->add_option("-o,--output", o.output, "Diagnostics JSONL");
  AddConfigFlags(lint, o);
  AddFormat(lint, o);

  CLI::App *evaluate =
      app.add_subcommand("evaluate", "Score diagnostics against ground truth");
  evaluate->add_option("predictions", o.corpus, "Diagnostics or corpus JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("gold", o.gold, "Ground truth JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  AddConfigFlags(evaluate, o);
  AddFormat(evaluate, o);

  CLI::App *segments =
      app.add_subcommand("segments", "Print segment breakdowns");
  segments->add_option("corpus", o.corpus, "Corpus JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  AddConfigFlags(segments, o);
  AddFormat(segments, o);

  CLI::App *tquery =
      app.add_subcommand("tquery", "Run a tree query over corpus trees");
  tquery->add_option("query", o.query, "Tree query")->required();
  tquery->add_option("corpus", o.corpus, "Corpus JSONL")
      ->required()
      ->check(CLI::ExistingFile);

  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*lint) return RunLint(o, out, err);
    if (*evaluate) return RunEvaluate(o, out, err);
    if (*segments) return RunSegments(o, out, err);
    return RunTquery(o, out, err);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::ios_base::failure &e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace reqlint
