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

// JSONL readers and writers for corpora, ground truth and diagnostics.
//
// Corpus record:
//   {"id": "R1", "text": "...",
//    "tokens": [{"text": "System-A", "lemma": "system-a", "pos": "NNP"}, ...],
//    "tree": "(S ...)",                      optional
//    "marks": [{"kind": "line_break", "before_token": 3}]}
//
// Ground truth record:
//   {"id": "R1", "smells": ["passive_voice"], "pattern": "P7"}
//
// Diagnostic record:
//   {"id": "R1",
//    "segments": [{"kind": "condition", "start": 0, "end": 9,
//                  "source": "C3", "condition_type": "trigger"}],
//    "findings": [{"kind": "passive_voice", "segment": 0, "start": 3,
//                  "end": 5, "technique": "structural", "detail": "1"}],
//    "recommendation": {"pattern": "P7", "rationale": "...",
//                       "frequencies": {...}}}

#ifndef REQLINT_CORPUS_H_
#define REQLINT_CORPUS_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "reqlint/model.h"

namespace reqlint {

using Json = nlohmann::ordered_json;

// Throws DataError naming the line (malformed JSON, schema violations,
// duplicate ids) or the requirement id (tree/token misalignment).
std::vector<AnnotatedRequirement> ParseCorpus(std::istream &in);
std::vector<AnnotatedRequirement> ReadCorpus(const std::filesystem::path &path);

// Checks the record invariants; throws DataError naming the id.
void ValidateRequirement(const AnnotatedRequirement &req);

Json RequirementToJson(const AnnotatedRequirement &req);
AnnotatedRequirement RequirementFromJson(const Json &j);

std::vector<GroundTruthEntry> ParseGold(std::istream &in);
std::vector<GroundTruthEntry> ReadGold(const std::filesystem::path &path);
Json GoldToJson(const GroundTruthEntry &entry);

Json DiagnosticToJson(const Diagnostic &diag);
Diagnostic DiagnosticFromJson(const Json &j);

// One compact JSON object per line, LF terminated.
void WriteDiagnostics(const std::vector<Diagnostic> &diags, std::ostream &out);
void WriteDiagnostics(const std::vector<Diagnostic> &diags,
                      const std::filesystem::path &path);
std::vector<Diagnostic> ParseDiagnostics(std::istream &in);
std::vector<Diagnostic> ReadDiagnostics(const std::filesystem::path &path);

}  // namespace reqlint

#endif  // REQLINT_CORPUS_H_
