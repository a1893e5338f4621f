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

// Access to the checked-in example corpus and token-level test helpers.

#ifndef REQLINT_TESTS_FIXTURES_H_
#define REQLINT_TESTS_FIXTURES_H_

#include <iterator>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "reqlint/corpus.h"
#include "reqlint/error.h"
#include "reqlint/model.h"
#include "reqlint/text_util.h"

namespace reqlint {

inline void PrintTo(const TokenSpan &s, std::ostream *os) {
  *os << "[" << s.start << ", " << s.end << ")";
}

}  // namespace reqlint

namespace reqlint::testing {

inline std::string FixturePath(const std::string &name) {
  return std::string(REQLINT_FIXTURES_DIR) + "/" + name;
}

inline const std::vector<AnnotatedRequirement> &Examples() {
  static const auto *corpus =
      new std::vector<AnnotatedRequirement>(ReadCorpus(FixturePath("paper_examples.jsonl")));
  return *corpus;
}

inline const std::vector<GroundTruthEntry> &Gold() {
  static const auto *gold =
      new std::vector<GroundTruthEntry>(ReadGold(FixturePath("gold.jsonl")));
  return *gold;
}

inline const AnnotatedRequirement &Example(const std::string &id) {
  for (const AnnotatedRequirement &r : Examples()) {
    if (r.id == id) return r;
  }
  throw Error("no fixture " + id);
}

inline const GroundTruthEntry &GoldFor(const std::string &id) {
  for (const GroundTruthEntry &g : Gold()) {
    if (g.id == id) return g;
  }
  throw Error("no gold " + id);
}

// Token span whose texts equal the words of `phrase`; first occurrence.
inline TokenSpan SpanOf(const AnnotatedRequirement &req,
                        const std::string &phrase) {
  const std::vector<std::string> words = SplitWords(phrase);
  for (std::size_t i = 0; i + words.size() <= req.tokens.size(); ++i) {
    bool ok = true;
    for (std::size_t k = 0; k < words.size() && ok; ++k) {
      ok = req.tokens[i + k].text == words[k];
    }
    if (ok) return {i, i + words.size()};
  }
  throw Error("phrase not in " + req.id + ": " + phrase);
}

// "word/TAG" or "word/TAG/lemma" items; lemma defaults to lowercase word.
inline AnnotatedRequirement Tagged(const std::string &id,
                                   const std::string &tagged) {
  AnnotatedRequirement req;
  req.id = id;
  for (const std::string &item : SplitWords(tagged)) {
    std::vector<std::string> parts;
    std::stringstream ss(item);
    for (std::string p; std::getline(ss, p, '/');) parts.push_back(p);
    if (parts.size() < 2) throw Error("bad tagged token " + item);
    Token t;
    t.text = parts[0];
    t.pos = parts[1];
    t.lemma = parts.size() > 2 ? parts[2] : ToLower(parts[0]);
    t.index = req.tokens.size();
    if (!req.text.empty()) req.text += ' ';
    req.text += t.text;
    req.tokens.push_back(t);
  }
  return req;
}

// Relabels `count` random constituents of a bracketed tree; leaves stay.
inline std::string MutateLabels(const std::string &tree, std::mt19937 &rng,
                                int count) {
  static const char *kLabels[] = {"S",  "SBAR", "NP", "VP", "PP",  "WHADVP",
                                  "IN", "ADVP", "MD", "VB", "VBZ", "NN",
                                  "VBG", "CC",  "DT", "RB"};
  std::vector<std::size_t> opens;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (tree[i] == '(') opens.push_back(i);
  }
  std::string out = tree;
  for (int k = 0; k < count && !opens.empty(); ++k) {
    const std::size_t at =
        opens[std::uniform_int_distribution<std::size_t>(0, opens.size() - 1)(rng)];
    std::size_t end = at + 1;
    while (end < out.size() && out[end] != ' ' && out[end] != '(') ++end;
    const char *label = kLabels[rng() % std::size(kLabels)];
    out.replace(at + 1, end - at - 1, label);
    opens.clear();
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] == '(') opens.push_back(i);
    }
  }
  return out;
}

}  // namespace reqlint::testing

#endif  // REQLINT_TESTS_FIXTURES_H_
