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

// Tagged example phrases for the structural patterns, one per pattern
// number, plus active-voice controls.

#ifndef REQLINT_TESTS_STRUCTURAL_EXAMPLES_H_
#define REQLINT_TESTS_STRUCTURAL_EXAMPLES_H_

#include <optional>
#include <string>
#include <vector>

#include "fixtures.h"
#include "reqlint/config.h"
#include "reqlint/model.h"
#include "reqlint/smells.h"

namespace reqlint::testing {

struct StructuralExample {
  int number;
  SegmentKind kind;
  std::optional<SegmentKind> slot;
  const char *tagged;
};

inline constexpr StructuralExample kStructuralPositives[] = {
    {1, SegmentKind::kSystemResponse, {}, "the/DT order/NN is/VBZ/be taken/VBN/take"},
    {2, SegmentKind::kSystemResponse, {},
     "the/DT order/NN has/VBZ/have not/RB taken/VBN/take"},
    {3, SegmentKind::kSystemResponse, {}, "the/DT order/NN was/VBD/be taken/VBN/take"},
    {4, SegmentKind::kSystemResponse, {},
     "the/DT order/NN was/VBD/be not/RB taken/VBN/take"},
    {5, SegmentKind::kSystemResponse, {},
     "the/DT order/NN had/VBD/have been/VBN/be taken/VBN/take"},
    {6, SegmentKind::kSystemResponse, {},
     "the/DT order/NN had/VBD/have not/RB been/VBN/be taken/VBN/take"},
    {7, SegmentKind::kSystemResponse, {},
     "the/DT order/NN has/VBZ/have been/VBN/be taken/VBN/take"},
    {8, SegmentKind::kSystemResponse, {},
     "the/DT order/NN has/VBZ/have not/RB been/VBN/be taken/VBN/take"},
    {9, SegmentKind::kNotMatched, SegmentKind::kCondition,
     "When/WRB for/IN each/DT subscriptions/NNS/subscription"},
    {10, SegmentKind::kNotMatched, SegmentKind::kCondition,
     "When/WRB receives/VBZ/receive the/DT subscription/NN order/NN"},
    {11, SegmentKind::kNotMatched, SegmentKind::kCondition,
     "When/WRB the/DT System-A/NNP seennd/NN the/DT subscription/NN order/NN"},
    {12, SegmentKind::kNotMatched, SegmentKind::kSystemResponse,
     "then/RB must/MD send/VB the/DT settlement/NN request/NN"},
    {13, SegmentKind::kNotMatched, SegmentKind::kSystemResponse,
     "System-A/NNP closes/VBZ/close the/DT Filter/NNP screen/NN"},
    {14, SegmentKind::kNotMatched, SegmentKind::kSystemResponse,
     "System-B/NNP must/MD sed/NN the/DT settlement/NN request/NN"},
};

// No control fires a passive pattern. Those with a modal or a subject and
// verb after the keyword are complete segments of their kind and fire
// nothing else either.
inline constexpr StructuralExample kStructuralNegatives[] = {
    {0, SegmentKind::kSystemResponse, {}, "System-A/NNP takes/VBZ/take the/DT order/NN"},
    {0, SegmentKind::kSystemResponse, {},
     "System-A/NNP must/MD send/VB the/DT settlement/NN request/NN"},
    {0, SegmentKind::kCondition, {},
     "When/WRB System-A/NNP receives/VBZ/receive the/DT subscription/NN order/NN"},
    {0, SegmentKind::kSystemResponse, {},
     "System-A/NNP is/VBZ/be sending/VBG/send the/DT report/NN"},
    {0, SegmentKind::kCondition, {}, "If/IN the/DT order/NN is/VBZ/be pending/JJ"},
    {0, SegmentKind::kSystemResponse, {},
     "System-A/NNP must/MD not/RB delete/VB the/DT record/NN"},
    {0, SegmentKind::kCondition, {},
     "When/WRB the/DT user/NN clicks/VBZ/click on/IN the/DT button/NN"},
};

inline bool IsCompleteControl(const StructuralExample &ex) {
  const std::string t = ex.tagged;
  return ex.kind == SegmentKind::kCondition || t.find("/MD") != std::string::npos;
}

inline std::vector<int> PassiveNumbers(const StructuralExample &ex) {
  const AnnotatedRequirement req = Tagged("s", ex.tagged);
  std::vector<int> out;
  for (const SmellFinding &f : MatchPassive(0, {0, req.tokens.size()}, req.tokens)) {
    out.push_back(std::stoi(f.technique.detail));
  }
  return out;
}

// All structural pattern numbers fired on a segment covering every token.
inline std::vector<int> StructuralNumbers(const StructuralExample &ex) {
  const AnnotatedRequirement req = Tagged("s", ex.tagged);
  Segment seg{ex.kind, {0, req.tokens.size()}, {}, {}, ex.slot};
  if (ex.kind == SegmentKind::kCondition) {
    seg.condition_type = ConditionType::kTrigger;
  }
  std::vector<int> out;
  for (const SmellFinding &f :
       MatchStructural(seg, 0, req.tokens, Keywords::Default())) {
    out.push_back(std::stoi(f.technique.detail));
  }
  return out;
}

// The number an example is meant to show: passive patterns are searched on
// their own, the rest through the segment-kind dispatch.
inline std::vector<int> ExampleNumbers(const StructuralExample &ex) {
  return ex.number >= 1 && ex.number <= 8 ? PassiveNumbers(ex)
                                          : StructuralNumbers(ex);
}

}  // namespace reqlint::testing

#endif  // REQLINT_TESTS_STRUCTURAL_EXAMPLES_H_
