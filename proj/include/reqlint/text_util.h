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

#ifndef REQLINT_TEXT_UTIL_H_
#define REQLINT_TEXT_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace reqlint {

std::string ToLower(std::string_view s);

// Whitespace-separated words.
std::vector<std::string> SplitWords(std::string_view s);

// Tab-separated fields of one line.
std::vector<std::string> SplitTabs(std::string_view line);

inline bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace reqlint

#endif  // REQLINT_TEXT_UTIL_H_
