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

// Smell detection over a segmented requirement. Four independent
// techniques: tree patterns for incomplete conditions, POS symbol patterns,
// rules over the segment list, and a glossary of imprecise verbs.

#ifndef REQLINT_SMELLS_H_
#define REQLINT_SMELLS_H_

#include <optional>
#include <vector>

#include "reqlint/catalog.h"
#include "reqlint/config.h"
#include "reqlint/model.h"
#include "reqlint/ptb_tree.h"

namespace reqlint {

// IC1/IC2 on a Condition or NotMatched segment. A match counts when its
// start lies inside the segment.
std::optional<SmellFinding> DetectIncompleteConditionTregex(
    const Segment &seg, std::size_t seg_index, const Tree &tree);

// Passive patterns 1-8 anywhere in `span`, as contiguous POS runs.
std::vector<SmellFinding> MatchPassive(std::size_t seg_index, TokenSpan span,
                                       const std::vector<Token> &tokens);

// Patterns 9-11, anchored at the first subordinating keyword of `span`.
std::vector<SmellFinding> MatchIncompleteCondition(
    std::size_t seg_index, TokenSpan span, const std::vector<Token> &tokens,
    const Keywords &keywords);

// Patterns 12-14, anchored at the start of `span` after an optional
// system-response starter.
std::vector<SmellFinding> MatchIncompleteSystemResponse(
    std::size_t seg_index, TokenSpan span, const std::vector<Token> &tokens,
    const Keywords &keywords);

// Structural patterns that apply to the segment's kind (and slot, for
// NotMatched segments). Passive patterns run on condition and system
// response segments.
std::vector<SmellFinding> MatchStructural(const Segment &seg,
                                          std::size_t seg_index,
                                          const std::vector<Token> &tokens,
                                          const Keywords &keywords);

// Segment kinds after promotion: a NotMatched segment carrying an
// incomplete-condition finding acts as a condition, one carrying an
// incomplete-system-response finding as a system response.
std::vector<SegmentKind> EffectiveKinds(
    const std::vector<Segment> &segs, const std::vector<SmellFinding> &found);

std::vector<SmellFinding> ApplyRequirementRules(
    const std::vector<Segment> &segs, const std::vector<SegmentKind> &kinds,
    const std::vector<Token> &tokens);

std::vector<SmellFinding> GlossaryHits(std::size_t seg_index, TokenSpan span,
                                       const std::vector<Token> &tokens,
                                       const VerbGlossary &glossary);

// Union of all techniques, one finding per (kind, segment). `tree` may be
// null, which skips the tree patterns.
std::vector<SmellFinding> DetectSmells(const AnnotatedRequirement &req,
                                       const Tree *tree,
                                       const std::vector<Segment> &segs,
                                       const LintConfig &config);

}  // namespace reqlint

#endif  // REQLINT_SMELLS_H_
