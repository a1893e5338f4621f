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

#ifndef REQLINT_ERROR_H_
#define REQLINT_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reqlint {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a bracketed tree or a tree query. `offset` is the byte
// offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Invalid input data: malformed JSONL, unknown enum values, invariant
// violations. `line` is 1-based, 0 when not tied to a line.
class DataError : public Error {
 public:
  DataError(const std::string &message, std::size_t line = 0,
            std::string id = {})
      : Error(Format(message, line, id)), line_(line), id_(std::move(id)) {}

  std::size_t line() const { return line_; }
  const std::string &id() const { return id_; }

 private:
  static std::string Format(const std::string &message, std::size_t line,
                            const std::string &id) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!id.empty()) out += "requirement '" + id + "': ";
    return out + message;
  }

  std::size_t line_;
  std::string id_;
};

}  // namespace reqlint

#endif  // REQLINT_ERROR_H_
