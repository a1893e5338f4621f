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

// Bundled pattern catalogs: tree patterns, structural POS patterns and the
// Rimay rewrite patterns.

#ifndef REQLINT_CATALOG_H_
#define REQLINT_CATALOG_H_

#include <string>
#include <string_view>
#include <vector>

#include "reqlint/model.h"
#include "reqlint/tree_query.h"

namespace reqlint {

struct TreePattern {
  std::string id;    // "SC1", "C3", "IC2", ...
  std::string role;  // scope | condition | time_condition | system_response
                     // | incomplete_condition
  Query query;
};

// Parsed and compiled from the TSV text. Throws DataError naming the line.
std::vector<TreePattern> ParseTreePatterns(std::string_view tsv);

// All bundled patterns, in file order.
const std::vector<TreePattern> &BundledTreePatterns();

// Throws Error for an unknown id.
const TreePattern &BundledTreePattern(std::string_view id);

struct StructuralPattern {
  int number = 0;
  SmellKind smell = SmellKind::kPassiveVoice;
  std::vector<std::string> symbols;
};

std::vector<StructuralPattern> ParseStructuralPatterns(std::string_view tsv);
const std::vector<StructuralPattern> &BundledStructuralPatterns();

struct RimayPatternInfo {
  RimayPatternId id = RimayPatternId::kP5;
  std::string name;
  std::string template_text;
  std::string concepts;
};

const std::vector<RimayPatternInfo> &RimayCatalog();
const RimayPatternInfo &RimayPattern(RimayPatternId id);

}  // namespace reqlint

#endif  // REQLINT_CATALOG_H_
