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

// Acceptance checks. Prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "reqlint/catalog.h"
#include "reqlint/eval.h"
#include "reqlint/pipeline.h"
#include "reqlint/recommender.h"
#include "reqlint/segmenter.h"
#include "reqlint/tree_query.h"
#include "structural_examples.h"
#include "tree_oracle.h"

namespace reqlint {
namespace {

using Clock = std::chrono::steady_clock;
using SK = SegmentKind;

constexpr double kRunningExampleSeconds = 1.0;
constexpr double kOracleSeconds = 30.0;
constexpr double kSuiteSeconds = 60.0;
constexpr int kRandomQueries = 50;
constexpr int kRandomTrees = 1000;

double Since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void Check(bool cond, const std::string &what) {
    if (!cond) {
      if (ok) detail = what;
      ok = false;
    }
  }
};

Diagnostic Lint(const std::string &id) {
  return LintRequirement(testing::Example(id), LintConfig()).diagnostic;
}

Outcome RunningExample() {
  Outcome o;
  const auto start = Clock::now();
  const AnnotatedRequirement &req = testing::Example("fig4-running");
  const Diagnostic d = Lint("fig4-running");
  const double secs = Since(start);
  o.Check(d.SmellSet() == std::set<SmellKind>{SmellKind::kIncompleteCondition,
                                              SmellKind::kNonAtomic,
                                              SmellKind::kPassiveVoice,
                                              SmellKind::kNotPreciseVerb},
          "smell set");
  auto seg_of = [&](SmellKind k) -> std::optional<std::size_t> {
    for (const SmellFinding &f : d.findings) {
      if (f.kind == k) return f.segment_index;
    }
    return 99;
  };
  o.Check(d.segments.size() == 3, "three segments");
  if (d.segments.size() == 3) {
    o.Check(d.segments[0].span == testing::SpanOf(req, "Upon reception of a "
                                                        "settlement instruction "
                                                        "from System-A"),
            "condition span");
    o.Check(d.segments[1].span ==
                testing::SpanOf(req, "System-B must process the settlement instruction"),
            "first response span");
    o.Check(d.segments[2].span ==
                testing::SpanOf(req, "the input media field must be set to SINF"),
            "second response span");
  }
  o.Check(seg_of(SmellKind::kIncompleteCondition) == 0u, "IC on the condition");
  o.Check(seg_of(SmellKind::kNotPreciseVerb) == 1u, "NPV on the first response");
  o.Check(seg_of(SmellKind::kPassiveVoice) == 2u, "passive on the second response");
  o.Check(seg_of(SmellKind::kNonAtomic) == std::nullopt, "non-atomic is whole-requirement");
  o.Check(d.recommendation && d.recommendation->pattern == RimayPatternId::kP7,
          "pattern P7");
  o.Check(secs < kRunningExampleSeconds, "time");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f s", secs);
  if (o.ok) o.detail = buf;
  return o;
}

struct PatternRow {
  const char *id;
  const char *pattern;
  SegmentKind kind;
  const char *expected;
};

const PatternRow kPatternRows[] = {
    {"t4-SC1", "SC1", SK::kScope, "For all the depositories"},
    {"t4-SC2", "SC2", SK::kScope, "for each settlement request"},
    {"t4-C1", "C1", SK::kCondition,
     "When System-A creates one of the following reports : list , list with Beta"},
    {"t4-C2", "C2", SK::kCondition,
     "Once System-A has successfully validated a settlement request"},
    {"t4-C3", "C3", SK::kCondition,
     "when the contract note has been received from System-C"},
    {"t4-C4", "C4", SK::kCondition,
     "When the fund frequency in reference data has an empty value"},
    {"t4-C5", "C5", SK::kCondition,
     "When the user clicks on the left side menu , portfolio section"},
    {"t4-C6", "C6", SK::kCondition,
     "When a user confirms that he wants to cancel the creation of an account record"},
    {"t4-C7", "C7", SK::kCondition,
     "If the settlement date is present in the instruction sent to System-A"},
    {"t4-C8", "C8", SK::kCondition, "Before the System-A cutover"},
    {"t4-SR1", "SR1", SK::kSystemResponse,
     "System-A must send the fund details report to local team daily"},
};

Outcome SegmentPatterns() {
  Outcome o;
  int exact = 0;
  for (const PatternRow &row : kPatternRows) {
    const AnnotatedRequirement &req = testing::Example(row.id);
    const TokenSpan want = testing::SpanOf(req, row.expected);
    const Tree tree = ParseTree(*req.tree);
    // The named pattern yields the span; an earlier pattern may claim the
    // same span first.
    const TreePattern &p = BundledTreePattern(row.pattern);
    bool matched = false;
    for (const Match &m : FindMatches(p.query, tree)) {
      TokenSpan s = SisterChainExtent(p.query.root(), tree, m.node);
      while (s.start < s.end && IsSeparator(req.tokens[s.start])) ++s.start;
      while (s.end > s.start && IsSeparator(req.tokens[s.end - 1])) --s.end;
      matched |= s == want;
    }
    bool found = false;
    for (const Segment &s : SegmentRequirement(req, &tree, Keywords::Default())) {
      found |= s.span == want && s.kind == row.kind &&
               s.source.kind == SegmentSourceKind::kTregex;
    }
    o.Check(matched && found, row.id);
    exact += matched && found;
  }
  if (o.ok) o.detail = std::to_string(exact) + "/11 exact";
  return o;
}

std::optional<std::string> IcTechnique(const std::string &id) {
  for (const SmellFinding &f : Lint(id).findings) {
    if (f.kind == SmellKind::kIncompleteCondition) return f.technique.detail;
  }
  return std::nullopt;
}

Outcome IncompleteConditionTrees() {
  Outcome o;
  o.Check(IcTechnique("t7-EIC1") == "IC2", "EIC1 via IC2");
  o.Check(IcTechnique("t7-EIC2") == "IC1", "EIC2 via IC1");
  o.Check(!IcTechnique("t4-C3"), "C3 condition complete");
  return o;
}

Outcome StructuralPatterns() {
  Outcome o;
  int pos = 0, neg = 0;
  for (const auto &ex : testing::kStructuralPositives) {
    const bool ok = testing::ExampleNumbers(ex) == std::vector<int>{ex.number};
    o.Check(ok, "#" + std::to_string(ex.number));
    pos += ok;
  }
  for (const auto &ex : testing::kStructuralNegatives) {
    bool ok = testing::PassiveNumbers(ex).empty();
    if (testing::IsCompleteControl(ex)) ok &= testing::StructuralNumbers(ex).empty();
    o.Check(ok, ex.tagged);
    neg += ok;
  }
  if (o.ok) {
    o.detail = std::to_string(pos) + " positives, " + std::to_string(neg) +
               " negatives";
  }
  return o;
}

Outcome SmellCatalog() {
  const std::pair<const char *, SmellKind> kRows[] = {
      {"t3-non-atomic", SmellKind::kNonAtomic},
      {"t3-incomplete-requirement", SmellKind::kIncompleteRequirement},
      {"t3-incorrect-order", SmellKind::kIncorrectOrder},
      {"t3-coordination-ambiguity", SmellKind::kCoordinationAmbiguity},
      {"t3-not-requirement", SmellKind::kNotARequirement},
      {"t3-incomplete-condition", SmellKind::kIncompleteCondition},
      {"t3-incomplete-system-response", SmellKind::kIncompleteSystemResponse},
      {"t3-passive-voice", SmellKind::kPassiveVoice},
      {"t3-not-precise-verb", SmellKind::kNotPreciseVerb},
  };
  Outcome o;
  for (const auto &[id, kind] : kRows) {
    const std::set<SmellKind> got = Lint(id).SmellSet();
    o.Check(got.count(kind) > 0, id);
    o.Check(got == testing::GoldFor(id).smells, std::string(id) + " vs gold");
  }
  return o;
}

SegmentFrequencies Freq(int scope, int pre, int trig, int time, int sr) {
  SegmentFrequencies f;
  f.scope = scope;
  f.precondition = pre;
  f.trigger = trig;
  f.time = time;
  f.system_response = sr;
  return f;
}

Outcome FrequencyRows() {
  struct Row {
    int scope, pre, trig, time, number;
  };
  const Row kRows[] = {{1, 0, 0, 0, 1}, {1, 1, 0, 0, 2}, {1, 0, 1, 0, 3},
                       {1, 0, 0, 1, 4}, {0, 0, 0, 0, 5}, {0, 1, 0, 0, 6},
                       {0, 0, 1, 0, 7}, {0, 0, 0, 1, 8}, {1, 0, 2, 0, 9},
                       {0, 1, 1, 0, 10}};
  Outcome o;
  for (const Row &r : kRows) {
    for (int sr = 1; sr <= 4; ++sr) {
      const auto p = MatchPattern(Freq(r.scope, r.pre, r.trig, r.time, sr));
      o.Check(p && PatternNumber(*p) == r.number,
              "row " + std::to_string(r.number) + " SR=" + std::to_string(sr));
    }
  }
  return o;
}

std::vector<NodeId> EngineNodes(const Query &q, const Tree &t) {
  std::vector<NodeId> out;
  for (const Match &m : FindMatches(q, t)) out.push_back(m.node);
  return out;
}

Outcome OracleEquivalence() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937 rng(2026);
  std::vector<Tree> trees;
  for (int i = 0; i < kRandomTrees; ++i) {
    trees.push_back(i % 2 ? testing::RandomPhraseTree(rng) : testing::RandomTree(rng));
  }
  long checks = 0;
  for (const TreePattern &p : BundledTreePatterns()) {
    auto oq = testing::FromEngine(p.query.root());
    for (const Tree &t : trees) {
      testing::Oracle oracle(t);
      o.Check(EngineNodes(p.query, t) == oracle.Matches(*oq), p.id);
      ++checks;
    }
  }
  testing::QueryGen gen{rng};
  testing::QueryRenderer render{rng};
  for (int i = 0; i < kRandomQueries; ++i) {
    auto oq = gen.Node(0);
    const std::string text = render.Expr(*oq);
    const Query q = Query::Compile(text);
    for (const Tree &t : trees) {
      testing::Oracle oracle(t);
      o.Check(EngineNodes(q, t) == oracle.Matches(*oq), text);
      ++checks;
    }
  }
  const double secs = Since(start);
  o.Check(BundledTreePatterns().size() == 13, "13 bundled patterns");
  o.Check(secs < kOracleSeconds, "time");
  char buf[96];
  std::snprintf(buf, sizeof buf, "%ld checks, %.1f s", checks, secs);
  if (o.ok) o.detail = buf;
  return o;
}

GroundTruthEntry G(std::string id, std::set<SmellKind> smells) {
  return {std::move(id), std::move(smells), std::nullopt};
}

Diagnostic D(std::string id, std::set<SmellKind> smells) {
  Diagnostic d;
  d.id = std::move(id);
  for (SmellKind k : smells) {
    SmellFinding f;
    f.kind = k;
    d.findings.push_back(f);
  }
  return d;
}

Outcome Metrics() {
  Outcome o;
  constexpr SmellKind A = SmellKind::kPassiveVoice;
  constexpr SmellKind B = SmellKind::kNonAtomic;
  const auto rows = SmellConfusion({G("r1", {A}), G("r2", {A, B}), G("r3", {})},
                                   {D("r1", {A}), D("r2", {B}), D("r3", {B})});
  const PrecisionRecall overall = Overall(rows);
  o.Check(overall.precision == Ratio::Make(2, 3), "overall precision 2/3");
  o.Check(overall.recall == Ratio::Make(2, 3), "overall recall 2/3");
  for (const LabelRow &r : rows) {
    const PrecisionRecall pr = ComputePrecisionRecall(r.counts);
    o.Check(pr.precision.has_value() == (r.counts.tp + r.counts.fp > 0), r.label);
    o.Check(pr.recall.has_value() == (r.counts.tp + r.counts.fn > 0), r.label);
    o.Check((FormatMetric(pr.precision) == "N/A") == !pr.precision, r.label);
  }
  o.Check(ComputePrecisionRecall({1, 0, 1}).recall == Ratio::Make(1, 2), "1/2");

  std::vector<Diagnostic> pred;
  for (const LintResult &r : LintCorpus(testing::Examples(), LintConfig(), 0)) {
    pred.push_back(r.diagnostic);
  }
  for (const auto &table : {SmellConfusion(testing::Gold(), pred),
                            PatternConfusion(testing::Gold(), pred)}) {
    const PrecisionRecall p = Overall(table);
    o.Check(p.precision == Ratio::Make(1, 1) && p.recall == Ratio::Make(1, 1),
            "fixture corpus overall 1.0");
  }
  return o;
}

std::vector<std::string> Split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

Outcome SuiteTime() {
  Outcome o;
  const auto start = Clock::now();
  const auto binaries = Split(REQLINT_TEST_BINARIES, '|');
  for (const std::string &bin : binaries) {
    const std::string cmd = "\"" + bin + "\" > /dev/null 2>&1";
    o.Check(std::system(cmd.c_str()) == 0, bin);
  }
  const double secs = Since(start);
  o.Check(secs < kSuiteSeconds, "time");
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu binaries, %.1f s", binaries.size(), secs);
  if (o.ok) o.detail = buf;
  return o;
}

}  // namespace
}  // namespace reqlint

int main() {
  using reqlint::Outcome;
  const std::pair<const char *, std::function<Outcome()>> kCriteria[] = {
      {"AC1 running example findings and P7", reqlint::RunningExample},
      {"AC2 segment patterns find expected spans", reqlint::SegmentPatterns},
      {"AC3 incomplete-condition tree patterns", reqlint::IncompleteConditionTrees},
      {"AC4 structural patterns and controls", reqlint::StructuralPatterns},
      {"AC5 smell catalog examples", reqlint::SmellCatalog},
      {"AC6 frequency rows and clamping", reqlint::FrequencyRows},
      {"AC7 tree-query oracle equivalence", reqlint::OracleEquivalence},
      {"AC8 metrics", reqlint::Metrics},
      {"AC9 primary suite time", reqlint::SuiteTime},
  };
  int failed = 0;
  for (const auto &[name, fn] : kCriteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s%s%s\n", o.ok ? "PASS" : "FAIL", name,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
