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

#include "reqlint/recommender.h"

#include <algorithm>

#include "reqlint/catalog.h"
#include "reqlint/segmenter.h"
#include "reqlint/smells.h"

namespace reqlint {
namespace {

void CountType(ConditionType type, SegmentFrequencies &f) {
  switch (type) {
    case ConditionType::kPrecondition:
      ++f.precondition;
      break;
    case ConditionType::kTime:
      ++f.time;
      break;
    case ConditionType::kTrigger:
    case ConditionType::kUnknown:
      ++f.trigger;
      break;
  }
}

bool IsOperatorLemma(const std::string &lemma, const Keywords &kw) {
  for (const auto &op : kw.operators) {
    if (op.size() == 1 && op[0] == lemma) return true;
  }
  return false;
}

ConditionType PromotedType(const Segment &seg, const SmellFinding &f,
                           const std::vector<Token> &tokens,
                           const Keywords &kw) {
  if (f.technique.kind == TechniqueKind::kTregex) {
    if (f.technique.detail == "IC1") {
      for (std::size_t i = seg.span.start; i < seg.span.end; ++i) {
        if (tokens[i].pos == "VBG") {
          return IsOperatorLemma(tokens[i].lemma, kw)
                     ? ConditionType::kPrecondition
                     : ConditionType::kTrigger;
        }
      }
    }
    return ConditionType::kTrigger;
  }
  return ClassifyCondition(seg, tokens, kw);
}

const SmellFinding *FindingFor(const std::vector<SmellFinding> &findings,
                               std::size_t seg_index, SmellKind kind) {
  for (const SmellFinding &f : findings) {
    if (f.kind == kind && f.segment_index == seg_index) return &f;
  }
  return nullptr;
}

}  // namespace

SegmentFrequencies CountFrequencies(const std::vector<Segment> &segs,
                                    const std::vector<SmellFinding> &findings,
                                    const std::vector<Token> &tokens,
                                    const Keywords &kw) {
  SegmentFrequencies f;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment &s = segs[i];
    const SmellFinding *ic =
        FindingFor(findings, i, SmellKind::kIncompleteCondition);
    const SmellFinding *isr =
        FindingFor(findings, i, SmellKind::kIncompleteSystemResponse);
    switch (s.kind) {
      case SegmentKind::kScope:
        ++f.scope;
        break;
      case SegmentKind::kCondition:
        CountType(s.condition_type.value_or(ClassifyCondition(s, tokens, kw)),
                  f);
        if (ic) ++f.incomplete_condition;
        break;
      case SegmentKind::kSystemResponse:
        ++f.system_response;
        if (isr) ++f.incomplete_system_response;
        break;
      case SegmentKind::kNotMatched:
        if (ic) {
          CountType(PromotedType(s, *ic, tokens, kw), f);
          ++f.incomplete_condition;
        } else if (isr) {
          ++f.system_response;
          ++f.incomplete_system_response;
        }
        break;
    }
  }
  return f;
}

std::optional<RimayPatternId> MatchPattern(const SegmentFrequencies &f) {
  const int scope = std::min(f.scope, 1);
  const int conditions = f.conditions();
  if (scope == 0 && conditions == 0 && f.system_response == 0) {
    return std::nullopt;
  }
  using P = RimayPatternId;
  if (conditions >= 2) return scope ? P::kP9 : P::kP10;
  if (conditions == 1) {
    if (f.precondition) return scope ? P::kP2 : P::kP6;
    if (f.trigger) return scope ? P::kP3 : P::kP7;
    return scope ? P::kP4 : P::kP8;
  }
  return scope ? P::kP1 : P::kP5;
}

std::string Rationale(const SegmentFrequencies &f,
                      std::optional<RimayPatternId> pattern,
                      bool not_a_requirement) {
  if (not_a_requirement) {
    return "not a requirement: no scope, condition or system response";
  }
  if (!pattern) return "no segments to map";
  std::vector<std::string> parts;
  auto count = [&parts](const char *name, int n) {
    if (n > 0) parts.push_back(std::string(name) + " x" + std::to_string(n));
  };
  auto clamped = [&parts](const char *name, int n) {
    if (n > 1) {
      parts.push_back(std::string(name) + " clamped " + std::to_string(n) +
                      "->1");
    } else if (n == 1) {
      parts.push_back(std::string(name) + " x1");
    }
  };
  clamped("scope", f.scope);
  count("precondition", f.precondition);
  count("trigger", f.trigger);
  count("time", f.time);
  clamped("SR", f.system_response);
  std::string out;
  for (const std::string &p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  if (f.system_response == 0) out += (out.empty() ? "" : ", ") + std::string("no SR");
  if (f.incomplete_condition + f.incomplete_system_response > 0) {
    out += ", incomplete x" +
           std::to_string(f.incomplete_condition + f.incomplete_system_response);
  }
  out += ": row " + std::to_string(PatternNumber(*pattern)) + " (" +
         RimayPattern(*pattern).name + ")";
  return out;
}

Recommendation Recommend(const std::vector<Segment> &segs,
                         const std::vector<SmellFinding> &findings,
                         const std::vector<Token> &tokens,
                         const Keywords &kw) {
  Recommendation r;
  r.frequencies = CountFrequencies(segs, findings, tokens, kw);
  const bool not_req = std::any_of(
      findings.begin(), findings.end(),
      [](const SmellFinding &f) { return f.kind == SmellKind::kNotARequirement; });
  if (!not_req) r.pattern = MatchPattern(r.frequencies);
  r.rationale = Rationale(r.frequencies, r.pattern, not_req);
  return r;
}

}  // namespace reqlint
