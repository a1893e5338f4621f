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

#include "reqlint/config.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "reqlint/embedded_data.h"
#include "reqlint/error.h"
#include "reqlint/text_util.h"

namespace reqlint {
namespace {

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::vector<std::string> DataLines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.front() == '#') line = {};
    std::string t = Trim(line);
    if (!t.empty()) out.push_back(std::move(t));
    pos = nl + 1;
  }
  return out;
}

Keywords Keywords::Parse(std::string_view text) {
  Keywords kw;
  std::set<std::string> *section = nullptr;
  bool in_operator = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++line_no;
    std::string line = Trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      const std::string name = line.substr(1, line.size() - 2);
      in_operator = false;
      if (name == "condition") {
        section = &kw.condition;
      } else if (name == "scope") {
        section = &kw.scope;
      } else if (name == "system_response") {
        section = &kw.system_response;
      } else if (name == "subordinator") {
        section = &kw.subordinator;
      } else if (name == "quantifier") {
        section = &kw.quantifier;
      } else if (name == "time") {
        section = &kw.time;
      } else if (name == "operator") {
        section = nullptr;
        in_operator = true;
      } else {
        throw DataError("unknown keyword section '" + name + "'", line_no);
      }
      continue;
    }
    if (in_operator) {
      kw.operators.push_back(SplitWords(ToLower(line)));
    } else if (section) {
      section->insert(ToLower(line));
    } else {
      throw DataError("keyword outside a section", line_no);
    }
  }
  return kw;
}

Keywords Keywords::Load(const std::filesystem::path &path) {
  return Parse(ReadFile(path));
}

const Keywords &Keywords::Default() {
  static const Keywords kDefault = Parse(embedded::Keywords());
  return kDefault;
}

VerbGlossary VerbGlossary::Parse(std::string_view text) {
  VerbGlossary g;
  for (const std::string &line : DataLines(text)) g.lemmas.insert(ToLower(line));
  return g;
}

VerbGlossary VerbGlossary::Load(const std::filesystem::path &path) {
  return Parse(ReadFile(path));
}

const VerbGlossary &VerbGlossary::Default() {
  static const VerbGlossary kDefault = Parse(embedded::Glossary());
  return kDefault;
}

LintConfig LintConfig::FromDirectory(const std::filesystem::path &dir) {
  LintConfig cfg;
  if (std::filesystem::exists(dir / "keywords.txt")) {
    cfg.keywords = Keywords::Load(dir / "keywords.txt");
  }
  if (std::filesystem::exists(dir / "glossary.txt")) {
    cfg.glossary = VerbGlossary::Load(dir / "glossary.txt");
  }
  return cfg;
}

}  // namespace reqlint
