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

// Maps a requirement's segment frequencies to one of the ten Rimay
// patterns.

#ifndef REQLINT_RECOMMENDER_H_
#define REQLINT_RECOMMENDER_H_

#include <optional>
#include <string>
#include <vector>

#include "reqlint/config.h"
#include "reqlint/model.h"

namespace reqlint {

// Conditions of unknown type count as triggers. Promoted NotMatched
// segments are typed from the finding that promoted them: IC2 gives a
// trigger, IC1 a precondition when the gerund is an operator verb (else a
// trigger), a structural pattern the regular classification.
SegmentFrequencies CountFrequencies(const std::vector<Segment> &segs,
                                    const std::vector<SmellFinding> &findings,
                                    const std::vector<Token> &tokens,
                                    const Keywords &keywords);

// Scope and system response are clamped to one before the lookup.
std::optional<RimayPatternId> MatchPattern(const SegmentFrequencies &f);

// Short ASCII explanation naming the frequency row, e.g.
// "trigger x1, SR clamped 2->1: row 7".
std::string Rationale(const SegmentFrequencies &f,
                      std::optional<RimayPatternId> pattern,
                      bool not_a_requirement);

Recommendation Recommend(const std::vector<Segment> &segs,
                         const std::vector<SmellFinding> &findings,
                         const std::vector<Token> &tokens,
                         const Keywords &keywords);

}  // namespace reqlint

#endif  // REQLINT_RECOMMENDER_H_
