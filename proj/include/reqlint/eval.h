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

// Precision and recall of smell detection and pattern suggestion against
// annotated ground truth.

#ifndef REQLINT_EVAL_H_
#define REQLINT_EVAL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "reqlint/model.h"

namespace reqlint {

struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  friend bool operator==(const ConfusionCounts &, const ConfusionCounts &) =
      default;
};

// Exact non-negative fraction, kept in lowest terms. den > 0.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Ratio Make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / den; }
  std::string ToString() const;  // "2/3", "1"

  friend bool operator==(const Ratio &, const Ratio &) = default;
};

struct PrecisionRecall {
  std::optional<Ratio> precision;  // absent when tp + fp == 0
  std::optional<Ratio> recall;     // absent when tp + fn == 0

  friend bool operator==(const PrecisionRecall &, const PrecisionRecall &) =
      default;
};

PrecisionRecall ComputePrecisionRecall(const ConfusionCounts &c);

struct LabelRow {
  std::string label;    // wire name: "passive_voice", "P7"
  std::string display;  // table name
  ConfusionCounts counts;
};

// Smell labels in catalog order. Throws DataError when `pred` holds an id
// absent from `gold`; ids missing from `pred` count as empty predictions.
std::vector<LabelRow> SmellConfusion(const std::vector<GroundTruthEntry> &gold,
                                     const std::vector<Diagnostic> &pred);

// Pattern labels P1..P10, one label per requirement on each side.
std::vector<LabelRow> PatternConfusion(
    const std::vector<GroundTruthEntry> &gold,
    const std::vector<Diagnostic> &pred);

// Micro-average. Throws Error when both denominators are zero.
PrecisionRecall Overall(const std::vector<LabelRow> &rows);

struct MetricsReport {
  std::string title;
  std::vector<LabelRow> rows;
  PrecisionRecall overall;
};

MetricsReport MakeReport(std::string title, std::vector<LabelRow> rows);

// "0.67" style cell, "N/A" when absent.
std::string FormatMetric(const std::optional<Ratio> &r);

std::string RenderTable(const MetricsReport &report);
nlohmann::ordered_json ReportToJson(const MetricsReport &report);

}  // namespace reqlint

#endif  // REQLINT_EVAL_H_
