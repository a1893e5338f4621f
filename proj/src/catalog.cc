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

#include "reqlint/catalog.h"

#include "reqlint/embedded_data.h"
#include "reqlint/error.h"
#include "reqlint/text_util.h"

namespace reqlint {
namespace {

template <typename Fn>
void ForEachRecord(std::string_view tsv, std::size_t min_fields, Fn fn) {
  std::size_t line_no = 0, pos = 0;
  while (pos < tsv.size()) {
    std::size_t nl = tsv.find('\n', pos);
    if (nl == std::string_view::npos) nl = tsv.size();
    std::string_view line = tsv.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto fields = SplitTabs(line);
    if (fields.size() < min_fields) {
      throw DataError("expected " + std::to_string(min_fields) +
                          " tab-separated fields",
                      line_no);
    }
    fn(fields, line_no);
  }
}

}  // namespace

std::vector<TreePattern> ParseTreePatterns(std::string_view tsv) {
  std::vector<TreePattern> out;
  ForEachRecord(tsv, 3, [&](const std::vector<std::string> &f, std::size_t n) {
    try {
      out.push_back({f[0], f[1], Query::Compile(f[2])});
    } catch (const ParseError &e) {
      throw DataError(std::string("pattern ") + f[0] + ": " + e.what(), n);
    }
  });
  return out;
}

const std::vector<TreePattern> &BundledTreePatterns() {
  static const auto *kPatterns =
      new std::vector<TreePattern>(ParseTreePatterns(embedded::TregexPatterns()));
  return *kPatterns;
}

const TreePattern &BundledTreePattern(std::string_view id) {
  for (const TreePattern &p : BundledTreePatterns()) {
    if (p.id == id) return p;
  }
  throw Error("unknown tree pattern " + std::string(id));
}

std::vector<StructuralPattern> ParseStructuralPatterns(std::string_view tsv) {
  std::vector<StructuralPattern> out;
  ForEachRecord(tsv, 3, [&](const std::vector<std::string> &f, std::size_t n) {
    auto smell = ParseSmellKind(f[1]);
    if (!smell) throw DataError("unknown smell '" + f[1] + "'", n);
    int number = 0;
    try {
      number = std::stoi(f[0]);
    } catch (const std::exception &) {
      throw DataError("bad pattern number '" + f[0] + "'", n);
    }
    out.push_back({number, *smell, SplitWords(f[2])});
  });
  return out;
}

const std::vector<StructuralPattern> &BundledStructuralPatterns() {
  static const auto *kPatterns = new std::vector<StructuralPattern>(
      ParseStructuralPatterns(embedded::StructuralPatterns()));
  return *kPatterns;
}

const std::vector<RimayPatternInfo> &RimayCatalog() {
  static const auto *kCatalog = [] {
    auto *out = new std::vector<RimayPatternInfo>;
    ForEachRecord(embedded::RimayPatterns(), 4,
                  [&](const std::vector<std::string> &f, std::size_t n) {
                    auto id = ParsePatternId(f[0]);
                    if (!id) throw DataError("unknown pattern " + f[0], n);
                    out->push_back({*id, f[1], f[2], f[3]});
                  });
    return out;
  }();
  return *kCatalog;
}

const RimayPatternInfo &RimayPattern(RimayPatternId id) {
  for (const RimayPatternInfo &p : RimayCatalog()) {
    if (p.id == id) return p;
  }
  throw Error("pattern missing from catalog: " + ToString(id));
}

}  // namespace reqlint
