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

// Overridable linter configuration: segment keywords and the imprecise-verb
// glossary. Defaults are the bundled data files.

#ifndef REQLINT_CONFIG_H_
#define REQLINT_CONFIG_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace reqlint {

// Placeholders used in the system_response section for layout marks.
inline constexpr std::string_view kLineBreakKeyword = "<line-break>";
inline constexpr std::string_view kBulletKeyword = "<bullet>";

struct Keywords {
  std::set<std::string> condition;
  std::set<std::string> scope;
  std::set<std::string> system_response;  // may hold the placeholders
  std::set<std::string> subordinator;
  std::set<std::string> quantifier;
  std::set<std::string> time;
  std::vector<std::vector<std::string>> operators;  // lemma sequences

  bool line_break_starts_sr() const {
    return system_response.count(std::string(kLineBreakKeyword)) > 0;
  }
  bool bullet_starts_sr() const {
    return system_response.count(std::string(kBulletKeyword)) > 0;
  }

  // INI-like text: "[section]" headers, one entry per line, '#' comments.
  // Throws DataError on unknown sections or entries outside a section.
  static Keywords Parse(std::string_view text);
  static Keywords Load(const std::filesystem::path &path);
  static const Keywords &Default();
};

struct VerbGlossary {
  std::set<std::string> lemmas;

  bool Contains(std::string_view lemma) const {
    return lemmas.count(std::string(lemma)) > 0;
  }

  // One lemma per line, '#' comments. Lemmas are lowercased.
  static VerbGlossary Parse(std::string_view text);
  static VerbGlossary Load(const std::filesystem::path &path);
  static const VerbGlossary &Default();
};

struct LintConfig {
  Keywords keywords = Keywords::Default();
  VerbGlossary glossary = VerbGlossary::Default();

  // Reads keywords.txt and glossary.txt from `dir` when present; missing
  // files keep the defaults.
  static LintConfig FromDirectory(const std::filesystem::path &dir);
};

// Environment variable naming the default configuration directory.
inline constexpr const char *kConfigDirEnv = "REQLINT_CONFIG_DIR";

// Splits text into lines, dropping '#' comments and surrounding blanks.
std::vector<std::string> DataLines(std::string_view text);

}  // namespace reqlint

#endif  // REQLINT_CONFIG_H_
