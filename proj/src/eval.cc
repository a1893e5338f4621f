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

#include "reqlint/eval.h"

#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "reqlint/catalog.h"
#include "reqlint/error.h"

namespace reqlint {
namespace {

std::map<std::string, const Diagnostic *> IndexPredictions(
    const std::vector<GroundTruthEntry> &gold,
    const std::vector<Diagnostic> &pred) {
  std::set<std::string> ids;
  for (const GroundTruthEntry &g : gold) {
    if (!ids.insert(g.id).second) throw DataError("duplicate gold id", 0, g.id);
  }
  std::map<std::string, const Diagnostic *> out;
  for (const Diagnostic &d : pred) {
    if (!ids.count(d.id)) throw DataError("id not in ground truth", 0, d.id);
    if (!out.emplace(d.id, &d).second) {
      throw DataError("duplicate prediction id", 0, d.id);
    }
  }
  return out;
}

nlohmann::ordered_json RatioJson(const std::optional<Ratio> &r) {
  if (!r) return nullptr;
  return {{"num", r->num}, {"den", r->den}, {"value", r->value()}};
}

}  // namespace

Ratio Ratio::Make(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw Error("invalid ratio");
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Ratio::ToString() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

PrecisionRecall ComputePrecisionRecall(const ConfusionCounts &c) {
  PrecisionRecall out;
  if (c.tp + c.fp > 0) out.precision = Ratio::Make(c.tp, c.tp + c.fp);
  if (c.tp + c.fn > 0) out.recall = Ratio::Make(c.tp, c.tp + c.fn);
  return out;
}

std::vector<LabelRow> SmellConfusion(const std::vector<GroundTruthEntry> &gold,
                                     const std::vector<Diagnostic> &pred) {
  const auto by_id = IndexPredictions(gold, pred);
  std::vector<LabelRow> rows;
  for (SmellKind k : kAllSmells) {
    rows.push_back({std::string(ToString(k)), std::string(DisplayName(k)), {}});
  }
  for (const GroundTruthEntry &g : gold) {
    std::set<SmellKind> predicted;
    if (auto it = by_id.find(g.id); it != by_id.end()) {
      predicted = it->second->SmellSet();
    }
    for (std::size_t i = 0; i < kAllSmells.size(); ++i) {
      const bool in_gold = g.smells.count(kAllSmells[i]) > 0;
      const bool in_pred = predicted.count(kAllSmells[i]) > 0;
      ConfusionCounts &c = rows[i].counts;
      if (in_gold && in_pred) ++c.tp;
      else if (in_gold) ++c.fn;
      else if (in_pred) ++c.fp;
    }
  }
  return rows;
}

std::vector<LabelRow> PatternConfusion(
    const std::vector<GroundTruthEntry> &gold,
    const std::vector<Diagnostic> &pred) {
  const auto by_id = IndexPredictions(gold, pred);
  std::vector<LabelRow> rows;
  for (RimayPatternId p : kAllPatterns) {
    rows.push_back({ToString(p), RimayPattern(p).name, {}});
  }
  auto row = [&rows](RimayPatternId p) -> ConfusionCounts & {
    return rows[PatternNumber(p) - 1].counts;
  };
  for (const GroundTruthEntry &g : gold) {
    std::optional<RimayPatternId> predicted;
    if (auto it = by_id.find(g.id);
        it != by_id.end() && it->second->recommendation) {
      predicted = it->second->recommendation->pattern;
    }
    if (predicted == g.pattern) {
      if (g.pattern) ++row(*g.pattern).tp;
      continue;
    }
    if (predicted) ++row(*predicted).fp;
    if (g.pattern) ++row(*g.pattern).fn;
  }
  return rows;
}

PrecisionRecall Overall(const std::vector<LabelRow> &rows) {
  ConfusionCounts sum;
  for (const LabelRow &r : rows) {
    sum.tp += r.counts.tp;
    sum.fp += r.counts.fp;
    sum.fn += r.counts.fn;
  }
  PrecisionRecall out = ComputePrecisionRecall(sum);
  if (!out.precision && !out.recall) {
    throw Error("overall metrics undefined: all denominators are zero");
  }
  return out;
}

MetricsReport MakeReport(std::string title, std::vector<LabelRow> rows) {
  MetricsReport r{std::move(title), std::move(rows), {}};
  r.overall = Overall(r.rows);
  return r;
}

std::string FormatMetric(const std::optional<Ratio> &r) {
  if (!r) return "N/A";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", r->value());
  return buf;
}

std::string RenderTable(const MetricsReport &report) {
  std::size_t width = 7;  // "Overall"
  for (const LabelRow &r : report.rows) width = std::max(width, r.display.size());
  std::ostringstream out;
  auto line = [&](const std::string &name, const std::string &tp,
                  const std::string &fp, const std::string &fn,
                  const std::string &p, const std::string &r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "  %5s %5s %5s  %6s %6s\n", tp.c_str(),
                  fp.c_str(), fn.c_str(), p.c_str(), r.c_str());
    out << name << std::string(width - name.size(), ' ') << buf;
  };
  out << report.title << "\n";
  line("", "TP", "FP", "FN", "P", "R");
  for (const LabelRow &r : report.rows) {
    const PrecisionRecall pr = ComputePrecisionRecall(r.counts);
    line(r.display, std::to_string(r.counts.tp), std::to_string(r.counts.fp),
         std::to_string(r.counts.fn), FormatMetric(pr.precision),
         FormatMetric(pr.recall));
  }
  line("Overall", "", "", "", FormatMetric(report.overall.precision),
       FormatMetric(report.overall.recall));
  return out.str();
}

nlohmann::ordered_json ReportToJson(const MetricsReport &report) {
  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  for (const LabelRow &r : report.rows) {
    const PrecisionRecall pr = ComputePrecisionRecall(r.counts);
    labels[r.label] = {{"tp", r.counts.tp},
                       {"fp", r.counts.fp},
                       {"fn", r.counts.fn},
                       {"precision", RatioJson(pr.precision)},
                       {"recall", RatioJson(pr.recall)}};
  }
  return {{"title", report.title},
          {"labels", labels},
          {"overall",
           {{"precision", RatioJson(report.overall.precision)},
            {"recall", RatioJson(report.overall.recall)}}}};
}

}  // namespace reqlint
