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

// Bundled copies of the files under data/, compiled into the library.

#ifndef REQLINT_EMBEDDED_DATA_H_
#define REQLINT_EMBEDDED_DATA_H_

#include <string_view>

namespace reqlint::embedded {

std::string_view TregexPatterns();
std::string_view StructuralPatterns();
std::string_view Glossary();
std::string_view Keywords();
std::string_view RimayPatterns();

}  // namespace reqlint::embedded

#endif  // REQLINT_EMBEDDED_DATA_H_
