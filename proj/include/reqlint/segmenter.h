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

// Splits a requirement into scope, condition and system-response segments.
//
// Tree patterns run first. Scope and condition matches are claimed outermost
// first. System-response matches are split at coordinated verb phrases and
// cut short before any claimed scope or condition they contain. Token runs
// left uncovered go to the keyword splitter, whose pieces are checked for
// the mandatory content of their kind; pieces failing the check become
// not-matched segments.

#ifndef REQLINT_SEGMENTER_H_
#define REQLINT_SEGMENTER_H_

#include <vector>

#include "reqlint/config.h"
#include "reqlint/model.h"
#include "reqlint/ptb_tree.h"

namespace reqlint {

// Punctuation and coordinating conjunctions; kept outside segment spans.
bool IsSeparator(const Token &token);
bool IsNoun(const Token &token);  // NN*, PRP
bool IsVerb(const Token &token);  // VB*
bool IsModal(const Token &token);

// `tree` may be null (degraded mode: splitter only). Throws DataError for an
// empty token list.
std::vector<Segment> SegmentRequirement(const AnnotatedRequirement &req,
                                        const Tree *tree,
                                        const Keywords &keywords);

// Convenience overload parsing req.tree when present.
std::vector<Segment> SegmentRequirement(const AnnotatedRequirement &req,
                                        const Keywords &keywords);

// Keyword splitter over one uncovered run. `preceding` holds the segments
// already placed before the run; they decide the slot of starter-less
// residue.
std::vector<Segment> SplitRun(const AnnotatedRequirement &req, TokenSpan run,
                              const std::vector<Segment> &preceding,
                              const Keywords &keywords);

// Table of mandatory content. `skip_starter` excludes the piece's first
// token from the check.
bool HasScopeContent(const std::vector<Token> &tokens, TokenSpan span,
                     const Keywords &keywords);
bool HasConditionContent(const std::vector<Token> &tokens, TokenSpan span,
                         bool skip_starter);
bool HasSystemResponseContent(const std::vector<Token> &tokens, TokenSpan span,
                              bool skip_starter);

ConditionType ClassifyCondition(const Segment &seg,
                                const std::vector<Token> &tokens,
                                const Keywords &keywords);

}  // namespace reqlint

#endif  // REQLINT_SEGMENTER_H_
