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

#include "reqlint/model.h"

#include <utility>

namespace reqlint {
namespace {

struct SmellNames {
  SmellKind kind;
  std::string_view wire;
  std::string_view display;
};

constexpr SmellNames kSmellNames[] = {
    {SmellKind::kNonAtomic, "non_atomic", "Non-atomic requirement"},
    {SmellKind::kIncompleteRequirement, "incomplete_requirement",
     "Incomplete requirement"},
    {SmellKind::kIncorrectOrder, "incorrect_order",
     "Incorrect order requirement"},
    {SmellKind::kCoordinationAmbiguity, "coordination_ambiguity",
     "Coordination ambiguity"},
    {SmellKind::kNotARequirement, "not_a_requirement", "Not requirement"},
    {SmellKind::kIncompleteCondition, "incomplete_condition",
     "Incomplete condition"},
    {SmellKind::kIncompleteSystemResponse, "incomplete_system_response",
     "Incomplete system response"},
    {SmellKind::kPassiveVoice, "passive_voice", "Passive voice"},
    {SmellKind::kNotPreciseVerb, "not_precise_verb", "Not precise verb"},
};

template <typename Enum, std::size_t N>
std::optional<Enum> Lookup(const std::pair<Enum, std::string_view> (&table)[N],
                           std::string_view name) {
  for (const auto &[value, text] : table) {
    if (text == name) return value;
  }
  return std::nullopt;
}

template <typename Enum, std::size_t N>
std::string_view Name(const std::pair<Enum, std::string_view> (&table)[N],
                      Enum value) {
  for (const auto &[v, text] : table) {
    if (v == value) return text;
  }
  return "?";
}

constexpr std::pair<SegmentKind, std::string_view> kSegmentKindNames[] = {
    {SegmentKind::kScope, "scope"},
    {SegmentKind::kCondition, "condition"},
    {SegmentKind::kSystemResponse, "system_response"},
    {SegmentKind::kNotMatched, "not_matched"},
};

constexpr std::pair<ConditionType, std::string_view> kConditionTypeNames[] = {
    {ConditionType::kTrigger, "trigger"},
    {ConditionType::kPrecondition, "precondition"},
    {ConditionType::kTime, "time"},
    {ConditionType::kUnknown, "unknown"},
};

constexpr std::pair<TechniqueKind, std::string_view> kTechniqueNames[] = {
    {TechniqueKind::kTregex, "tregex"},
    {TechniqueKind::kStructural, "structural"},
    {TechniqueKind::kRule, "rule"},
    {TechniqueKind::kGlossary, "glossary"},
};

}  // namespace

std::string_view ToString(SmellKind kind) {
  for (const auto &n : kSmellNames) {
    if (n.kind == kind) return n.wire;
  }
  return "?";
}

std::string_view DisplayName(SmellKind kind) {
  for (const auto &n : kSmellNames) {
    if (n.kind == kind) return n.display;
  }
  return "?";
}

std::optional<SmellKind> ParseSmellKind(std::string_view name) {
  for (const auto &n : kSmellNames) {
    if (n.wire == name) return n.kind;
  }
  return std::nullopt;
}

bool IsRequirementLevel(SmellKind kind) {
  switch (kind) {
    case SmellKind::kNonAtomic:
    case SmellKind::kIncompleteRequirement:
    case SmellKind::kIncorrectOrder:
    case SmellKind::kCoordinationAmbiguity:
    case SmellKind::kNotARequirement:
      return true;
    default:
      return false;
  }
}

std::string ToString(RimayPatternId id) {
  return "P" + std::to_string(PatternNumber(id));
}

std::optional<RimayPatternId> ParsePatternId(std::string_view name) {
  for (RimayPatternId id : kAllPatterns) {
    if (ToString(id) == name) return id;
  }
  return std::nullopt;
}

std::string_view ToString(SegmentKind kind) {
  return Name(kSegmentKindNames, kind);
}
std::optional<SegmentKind> ParseSegmentKind(std::string_view name) {
  return Lookup(kSegmentKindNames, name);
}

std::string_view ToString(ConditionType type) {
  return Name(kConditionTypeNames, type);
}
std::optional<ConditionType> ParseConditionType(std::string_view name) {
  return Lookup(kConditionTypeNames, name);
}

std::string_view ToString(TechniqueKind kind) {
  return Name(kTechniqueNames, kind);
}
std::optional<TechniqueKind> ParseTechniqueKind(std::string_view name) {
  return Lookup(kTechniqueNames, name);
}

std::string SegmentSource::ToString() const {
  switch (kind) {
    case SegmentSourceKind::kTregex:
      return pattern_id;
    case SegmentSourceKind::kSplitter:
      return "splitter";
    case SegmentSourceKind::kResidual:
      return "residual";
  }
  return "residual";
}

std::optional<SegmentSource> SegmentSource::Parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text == "splitter") return SegmentSource{SegmentSourceKind::kSplitter, {}};
  if (text == "residual") return SegmentSource{SegmentSourceKind::kResidual, {}};
  return SegmentSource{SegmentSourceKind::kTregex, std::string(text)};
}

std::set<SmellKind> Diagnostic::SmellSet() const {
  std::set<SmellKind> out;
  for (const SmellFinding &f : findings) out.insert(f.kind);
  return out;
}

}  // namespace reqlint
