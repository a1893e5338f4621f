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

// Plain data model shared by every stage of the linter: requirements and
// their annotations, segments, smell findings, recommendations and the
// ground truth used for evaluation.

#ifndef REQLINT_MODEL_H_
#define REQLINT_MODEL_H_

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace reqlint {

// Half-open token range [start, end).
struct TokenSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool empty() const { return end <= start; }
  bool Contains(std::size_t i) const { return i >= start && i < end; }
  bool Contains(const TokenSpan &o) const {
    return o.start >= start && o.end <= end;
  }
  bool Overlaps(const TokenSpan &o) const {
    return start < o.end && o.start < end;
  }

  friend auto operator<=>(const TokenSpan &, const TokenSpan &) = default;
};

struct Token {
  std::string text;
  std::string lemma;  // lowercase
  std::string pos;    // Penn Treebank tag
  std::size_t index = 0;

  friend bool operator==(const Token &, const Token &) = default;
};

enum class LayoutMarkKind { kLineBreak, kBullet };

struct LayoutMark {
  LayoutMarkKind kind = LayoutMarkKind::kLineBreak;
  std::size_t before_token = 0;

  friend bool operator==(const LayoutMark &, const LayoutMark &) = default;
};

struct AnnotatedRequirement {
  std::string id;
  std::string text;
  std::vector<Token> tokens;
  std::optional<std::string> tree;  // bracketed constituency tree
  std::vector<LayoutMark> marks;
};

// --- Smells -----------------------------------------------------------------

enum class SmellKind {
  kNonAtomic,
  kIncompleteRequirement,
  kIncorrectOrder,
  kCoordinationAmbiguity,
  kNotARequirement,
  kIncompleteCondition,
  kIncompleteSystemResponse,
  kPassiveVoice,
  kNotPreciseVerb,
};

inline constexpr std::array<SmellKind, 9> kAllSmells = {
    SmellKind::kNonAtomic,
    SmellKind::kIncompleteRequirement,
    SmellKind::kIncorrectOrder,
    SmellKind::kCoordinationAmbiguity,
    SmellKind::kNotARequirement,
    SmellKind::kIncompleteCondition,
    SmellKind::kIncompleteSystemResponse,
    SmellKind::kPassiveVoice,
    SmellKind::kNotPreciseVerb,
};

// snake_case wire name, e.g. "passive_voice".
std::string_view ToString(SmellKind kind);
// Analyst-facing catalog name, e.g. "Passive voice".
std::string_view DisplayName(SmellKind kind);
std::optional<SmellKind> ParseSmellKind(std::string_view name);
// The first five smells concern the whole requirement.
bool IsRequirementLevel(SmellKind kind);

// --- Rimay patterns ---------------------------------------------------------

enum class RimayPatternId { kP1 = 1, kP2, kP3, kP4, kP5, kP6, kP7, kP8, kP9, kP10 };

inline constexpr std::array<RimayPatternId, 10> kAllPatterns = {
    RimayPatternId::kP1, RimayPatternId::kP2, RimayPatternId::kP3,
    RimayPatternId::kP4, RimayPatternId::kP5, RimayPatternId::kP6,
    RimayPatternId::kP7, RimayPatternId::kP8, RimayPatternId::kP9,
    RimayPatternId::kP10,
};

std::string ToString(RimayPatternId id);  // "P1" .. "P10"
std::optional<RimayPatternId> ParsePatternId(std::string_view name);
inline int PatternNumber(RimayPatternId id) { return static_cast<int>(id); }

// --- Segments ---------------------------------------------------------------

enum class SegmentKind { kScope, kCondition, kSystemResponse, kNotMatched };

std::string_view ToString(SegmentKind kind);
std::optional<SegmentKind> ParseSegmentKind(std::string_view name);

enum class ConditionType { kTrigger, kPrecondition, kTime, kUnknown };

std::string_view ToString(ConditionType type);
std::optional<ConditionType> ParseConditionType(std::string_view name);

enum class SegmentSourceKind { kTregex, kSplitter, kResidual };

struct SegmentSource {
  SegmentSourceKind kind = SegmentSourceKind::kResidual;
  std::string pattern_id;  // set for kTregex

  // "C3" for Tregex segments, "splitter" or "residual" otherwise.
  std::string ToString() const;
  static std::optional<SegmentSource> Parse(std::string_view text);

  friend bool operator==(const SegmentSource &, const SegmentSource &) =
      default;
};

struct Segment {
  SegmentKind kind = SegmentKind::kNotMatched;
  TokenSpan span;
  SegmentSource source;
  std::optional<ConditionType> condition_type;  // Condition segments only
  // For NotMatched segments: the segment kind the splitter attempted to
  // validate (from the starter keyword or position), if any.
  std::optional<SegmentKind> slot;

  friend bool operator==(const Segment &, const Segment &) = default;
};

// --- Findings ---------------------------------------------------------------

enum class TechniqueKind { kTregex, kStructural, kRule, kGlossary };

std::string_view ToString(TechniqueKind kind);
std::optional<TechniqueKind> ParseTechniqueKind(std::string_view name);

struct Technique {
  TechniqueKind kind = TechniqueKind::kRule;
  // Tregex pattern id, structural pattern number, rule name or verb lemma.
  std::string detail;

  static Technique Tregex(std::string pattern_id) {
    return {TechniqueKind::kTregex, std::move(pattern_id)};
  }
  static Technique Structural(int number) {
    return {TechniqueKind::kStructural, std::to_string(number)};
  }
  static Technique Rule(std::string name) {
    return {TechniqueKind::kRule, std::move(name)};
  }
  static Technique Glossary(std::string lemma) {
    return {TechniqueKind::kGlossary, std::move(lemma)};
  }

  friend bool operator==(const Technique &, const Technique &) = default;
};

struct SmellFinding {
  SmellKind kind = SmellKind::kNotARequirement;
  std::optional<std::size_t> segment_index;  // absent for requirement-level
  TokenSpan evidence;
  Technique technique;

  friend bool operator==(const SmellFinding &, const SmellFinding &) = default;
};

// --- Recommendation ---------------------------------------------------------

struct SegmentFrequencies {
  int scope = 0;
  int precondition = 0;
  int trigger = 0;
  int time = 0;
  int system_response = 0;
  int incomplete_condition = 0;
  int incomplete_system_response = 0;

  int conditions() const { return precondition + trigger + time; }

  friend bool operator==(const SegmentFrequencies &,
                         const SegmentFrequencies &) = default;
};

struct Recommendation {
  std::optional<RimayPatternId> pattern;  // absent for "not a requirement"
  SegmentFrequencies frequencies;
  std::string rationale;

  friend bool operator==(const Recommendation &, const Recommendation &) =
      default;
};

struct Diagnostic {
  std::string id;
  std::vector<Segment> segments;
  std::vector<SmellFinding> findings;
  std::optional<Recommendation> recommendation;

  std::set<SmellKind> SmellSet() const;

  friend bool operator==(const Diagnostic &, const Diagnostic &) = default;
};

struct GroundTruthEntry {
  std::string id;
  std::set<SmellKind> smells;
  std::optional<RimayPatternId> pattern;

  friend bool operator==(const GroundTruthEntry &, const GroundTruthEntry &) =
      default;
};

}  // namespace reqlint

#endif  // REQLINT_MODEL_H_
