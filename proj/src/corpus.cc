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

#include "reqlint/corpus.h"

#include <fstream>
#include <set>

#include "reqlint/error.h"
#include "reqlint/ptb_tree.h"
#include "reqlint/text_util.h"

namespace reqlint {
namespace {

std::ifstream OpenIn(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

// Calls fn(json, line_no) for every non-blank line.
template <typename Fn>
void ForEachJsonLine(std::istream &in, Fn fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error &e) {
      throw DataError(std::string("malformed JSON: ") + e.what(), line_no);
    }
    if (!j.is_object()) throw DataError("expected a JSON object", line_no);
    try {
      fn(j, line_no);
    } catch (const DataError &e) {
      if (e.line() != 0) throw;
      throw DataError(e.what(), line_no);
    } catch (const Json::exception &e) {
      throw DataError(std::string("schema error: ") + e.what(), line_no);
    }
  }
}

const Json &Field(const Json &j, const char *name) {
  auto it = j.find(name);
  if (it == j.end()) throw DataError(std::string("missing field '") + name + "'");
  return *it;
}

std::string StringField(const Json &j, const char *name) {
  const Json &v = Field(j, name);
  if (!v.is_string()) {
    throw DataError(std::string("field '") + name + "' must be a string");
  }
  return v.get<std::string>();
}

std::size_t IndexField(const Json &j, const char *name) {
  const Json &v = Field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0)) {
    throw DataError(std::string("field '") + name +
                    "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string_view ToString(LayoutMarkKind kind) {
  return kind == LayoutMarkKind::kBullet ? "bullet" : "line_break";
}

Json FrequenciesToJson(const SegmentFrequencies &f) {
  Json j;
  j["scope"] = f.scope;
  j["precondition"] = f.precondition;
  j["trigger"] = f.trigger;
  j["time"] = f.time;
  j["system_response"] = f.system_response;
  j["incomplete_condition"] = f.incomplete_condition;
  j["incomplete_system_response"] = f.incomplete_system_response;
  return j;
}

SegmentFrequencies FrequenciesFromJson(const Json &j) {
  SegmentFrequencies f;
  f.scope = Field(j, "scope").get<int>();
  f.precondition = Field(j, "precondition").get<int>();
  f.trigger = Field(j, "trigger").get<int>();
  f.time = Field(j, "time").get<int>();
  f.system_response = Field(j, "system_response").get<int>();
  f.incomplete_condition = Field(j, "incomplete_condition").get<int>();
  f.incomplete_system_response =
      Field(j, "incomplete_system_response").get<int>();
  return f;
}

}  // namespace

void ValidateRequirement(const AnnotatedRequirement &req) {
  auto fail = [&](const std::string &msg) { throw DataError(msg, 0, req.id); };
  if (req.id.empty()) throw DataError("empty id");
  if (req.tokens.empty()) fail("no tokens");
  for (std::size_t i = 0; i < req.tokens.size(); ++i) {
    const Token &t = req.tokens[i];
    if (t.text.empty()) fail("token " + std::to_string(i) + " has empty text");
    if (t.pos.empty()) fail("token " + std::to_string(i) + " has empty pos");
    if (t.index != i) fail("token " + std::to_string(i) + " has wrong index");
  }
  for (const LayoutMark &m : req.marks) {
    if (m.before_token > req.tokens.size()) fail("layout mark out of range");
  }
  if (!req.tree) return;
  Tree tree;
  try {
    tree = ParseTree(*req.tree);
  } catch (const ParseError &e) {
    fail(std::string("bad tree: ") + e.what());
  }
  const auto words = LeafWords(tree);
  if (words.size() != req.tokens.size()) {
    fail("tree has " + std::to_string(words.size()) + " leaves but " +
         std::to_string(req.tokens.size()) + " tokens");
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i] != req.tokens[i].text) {
      fail("tree leaf " + std::to_string(i) + " '" + words[i] +
           "' does not match token '" + req.tokens[i].text + "'");
    }
  }
}

AnnotatedRequirement RequirementFromJson(const Json &j) {
  AnnotatedRequirement req;
  req.id = StringField(j, "id");
  try {
    req.text = StringField(j, "text");
    const Json &tokens = Field(j, "tokens");
    if (!tokens.is_array()) throw DataError("field 'tokens' must be an array");
    for (const Json &tj : tokens) {
      Token t;
      t.text = StringField(tj, "text");
      t.lemma = ToLower(StringField(tj, "lemma"));
      t.pos = StringField(tj, "pos");
      t.index = tj.contains("index") ? IndexField(tj, "index")
                                     : req.tokens.size();
      req.tokens.push_back(std::move(t));
    }
    if (auto it = j.find("tree"); it != j.end() && !it->is_null()) {
      if (!it->is_string()) throw DataError("field 'tree' must be a string");
      req.tree = it->get<std::string>();
    }
    if (auto it = j.find("marks"); it != j.end()) {
      if (!it->is_array()) throw DataError("field 'marks' must be an array");
      for (const Json &mj : *it) {
        LayoutMark m;
        const std::string kind = StringField(mj, "kind");
        if (kind == "line_break") {
          m.kind = LayoutMarkKind::kLineBreak;
        } else if (kind == "bullet") {
          m.kind = LayoutMarkKind::kBullet;
        } else {
          throw DataError("unknown layout mark '" + kind + "'");
        }
        m.before_token = IndexField(mj, "before_token");
        req.marks.push_back(m);
      }
    }
  } catch (const DataError &e) {
    if (!e.id().empty()) throw;
    throw DataError(e.what(), 0, req.id);
  }
  return req;
}

Json RequirementToJson(const AnnotatedRequirement &req) {
  Json j;
  j["id"] = req.id;
  j["text"] = req.text;
  j["tokens"] = Json::array();
  for (const Token &t : req.tokens) {
    j["tokens"].push_back({{"text", t.text}, {"lemma", t.lemma}, {"pos", t.pos}});
  }
  if (req.tree) j["tree"] = *req.tree;
  j["marks"] = Json::array();
  for (const LayoutMark &m : req.marks) {
    j["marks"].push_back(
        {{"kind", ToString(m.kind)}, {"before_token", m.before_token}});
  }
  return j;
}

std::vector<AnnotatedRequirement> ParseCorpus(std::istream &in) {
  std::vector<AnnotatedRequirement> out;
  std::set<std::string> ids;
  ForEachJsonLine(in, [&](const Json &j, std::size_t) {
    AnnotatedRequirement req = RequirementFromJson(j);
    if (!ids.insert(req.id).second) {
      throw DataError("duplicate id", 0, req.id);
    }
    ValidateRequirement(req);
    out.push_back(std::move(req));
  });
  return out;
}

std::vector<AnnotatedRequirement> ReadCorpus(const std::filesystem::path &path) {
  auto in = OpenIn(path);
  return ParseCorpus(in);
}

std::vector<GroundTruthEntry> ParseGold(std::istream &in) {
  std::vector<GroundTruthEntry> out;
  std::set<std::string> ids;
  ForEachJsonLine(in, [&](const Json &j, std::size_t) {
    GroundTruthEntry e;
    e.id = StringField(j, "id");
    const Json &smells = Field(j, "smells");
    if (!smells.is_array()) throw DataError("field 'smells' must be an array");
    for (const Json &s : smells) {
      if (!s.is_string()) throw DataError("smell names must be strings");
      auto kind = ParseSmellKind(s.get<std::string>());
      if (!kind) {
        throw DataError("unknown smell '" + s.get<std::string>() + "'");
      }
      e.smells.insert(*kind);
    }
    if (auto it = j.find("pattern"); it != j.end() && !it->is_null()) {
      if (!it->is_string()) throw DataError("field 'pattern' must be a string");
      auto id = ParsePatternId(it->get<std::string>());
      if (!id) {
        throw DataError("unknown pattern '" + it->get<std::string>() + "'");
      }
      e.pattern = *id;
    }
    if (!ids.insert(e.id).second) throw DataError("duplicate id", 0, e.id);
    out.push_back(std::move(e));
  });
  return out;
}

std::vector<GroundTruthEntry> ReadGold(const std::filesystem::path &path) {
  auto in = OpenIn(path);
  return ParseGold(in);
}

Json GoldToJson(const GroundTruthEntry &entry) {
  Json j;
  j["id"] = entry.id;
  j["smells"] = Json::array();
  for (SmellKind k : entry.smells) j["smells"].push_back(ToString(k));
  j["pattern"] = entry.pattern ? Json(ToString(*entry.pattern)) : Json(nullptr);
  return j;
}

Json DiagnosticToJson(const Diagnostic &diag) {
  Json j;
  j["id"] = diag.id;
  j["segments"] = Json::array();
  for (const Segment &s : diag.segments) {
    Json sj;
    sj["kind"] = ToString(s.kind);
    sj["start"] = s.span.start;
    sj["end"] = s.span.end;
    sj["source"] = s.source.ToString();
    if (s.condition_type) sj["condition_type"] = ToString(*s.condition_type);
    if (s.slot) sj["slot"] = ToString(*s.slot);
    j["segments"].push_back(std::move(sj));
  }
  j["findings"] = Json::array();
  for (const SmellFinding &f : diag.findings) {
    Json fj;
    fj["kind"] = ToString(f.kind);
    if (f.segment_index) fj["segment"] = *f.segment_index;
    fj["start"] = f.evidence.start;
    fj["end"] = f.evidence.end;
    fj["technique"] = ToString(f.technique.kind);
    fj["detail"] = f.technique.detail;
    j["findings"].push_back(std::move(fj));
  }
  if (diag.recommendation) {
    const Recommendation &r = *diag.recommendation;
    Json rj;
    rj["pattern"] = r.pattern ? Json(ToString(*r.pattern)) : Json(nullptr);
    rj["rationale"] = r.rationale;
    rj["frequencies"] = FrequenciesToJson(r.frequencies);
    j["recommendation"] = std::move(rj);
  } else {
    j["recommendation"] = nullptr;
  }
  return j;
}

Diagnostic DiagnosticFromJson(const Json &j) {
  Diagnostic d;
  d.id = StringField(j, "id");
  for (const Json &sj : Field(j, "segments")) {
    Segment s;
    auto kind = ParseSegmentKind(StringField(sj, "kind"));
    if (!kind) throw DataError("unknown segment kind", 0, d.id);
    s.kind = *kind;
    s.span = {IndexField(sj, "start"), IndexField(sj, "end")};
    auto source = SegmentSource::Parse(StringField(sj, "source"));
    if (!source) throw DataError("empty segment source", 0, d.id);
    s.source = *source;
    if (sj.contains("condition_type")) {
      s.condition_type = ParseConditionType(StringField(sj, "condition_type"));
      if (!s.condition_type) throw DataError("unknown condition type", 0, d.id);
    }
    if (sj.contains("slot")) {
      s.slot = ParseSegmentKind(StringField(sj, "slot"));
      if (!s.slot) throw DataError("unknown segment slot", 0, d.id);
    }
    d.segments.push_back(std::move(s));
  }
  for (const Json &fj : Field(j, "findings")) {
    SmellFinding f;
    auto kind = ParseSmellKind(StringField(fj, "kind"));
    if (!kind) {
      throw DataError("unknown smell '" + StringField(fj, "kind") + "'", 0,
                      d.id);
    }
    f.kind = *kind;
    if (fj.contains("segment")) f.segment_index = IndexField(fj, "segment");
    f.evidence = {IndexField(fj, "start"), IndexField(fj, "end")};
    auto tech = ParseTechniqueKind(StringField(fj, "technique"));
    if (!tech) throw DataError("unknown technique", 0, d.id);
    f.technique = {*tech, StringField(fj, "detail")};
    d.findings.push_back(std::move(f));
  }
  if (auto it = j.find("recommendation"); it != j.end() && !it->is_null()) {
    Recommendation r;
    const Json &p = Field(*it, "pattern");
    if (!p.is_null()) {
      r.pattern = ParsePatternId(p.get<std::string>());
      if (!r.pattern) throw DataError("unknown pattern", 0, d.id);
    }
    r.rationale = StringField(*it, "rationale");
    r.frequencies = FrequenciesFromJson(Field(*it, "frequencies"));
    d.recommendation = std::move(r);
  }
  return d;
}

void WriteDiagnostics(const std::vector<Diagnostic> &diags, std::ostream &out) {
  for (const Diagnostic &d : diags) out << DiagnosticToJson(d).dump() << '\n';
}

void WriteDiagnostics(const std::vector<Diagnostic> &diags,
                      const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  WriteDiagnostics(diags, out);
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
}

std::vector<Diagnostic> ParseDiagnostics(std::istream &in) {
  std::vector<Diagnostic> out;
  ForEachJsonLine(in, [&](const Json &j, std::size_t) {
    out.push_back(DiagnosticFromJson(j));
  });
  return out;
}

std::vector<Diagnostic> ReadDiagnostics(const std::filesystem::path &path) {
  auto in = OpenIn(path);
  return ParseDiagnostics(in);
}

}  // namespace reqlint
