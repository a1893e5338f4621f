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

// Segment, detect and recommend for one requirement or a whole corpus.

#ifndef REQLINT_PIPELINE_H_
#define REQLINT_PIPELINE_H_

#include <string>
#include <vector>

#include "reqlint/config.h"
#include "reqlint/model.h"

namespace reqlint {

struct LintResult {
  Diagnostic diagnostic;
  std::vector<std::string> warnings;
};

LintResult LintRequirement(const AnnotatedRequirement &req,
                           const LintConfig &config);

// Results keep corpus order whatever `jobs` is. jobs == 0 uses the hardware
// concurrency. The first failing requirement's exception is rethrown.
std::vector<LintResult> LintCorpus(const std::vector<AnnotatedRequirement> &corpus,
                                   const LintConfig &config, unsigned jobs = 1);

}  // namespace reqlint

#endif  // REQLINT_PIPELINE_H_
