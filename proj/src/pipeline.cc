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

#include "reqlint/pipeline.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>

#include "reqlint/ptb_tree.h"
#include "reqlint/recommender.h"
#include "reqlint/segmenter.h"
#include "reqlint/smells.h"

namespace reqlint {

LintResult LintRequirement(const AnnotatedRequirement &req,
                           const LintConfig &config) {
  LintResult out;
  out.diagnostic.id = req.id;
  std::optional<Tree> tree;
  if (req.tree) {
    tree = ParseTree(*req.tree);
  } else {
    out.warnings.push_back("requirement '" + req.id +
                           "': no parse tree, tree-pattern detection skipped");
  }
  const Tree *t = tree ? &*tree : nullptr;
  Diagnostic &d = out.diagnostic;
  d.segments = SegmentRequirement(req, t, config.keywords);
  d.findings = DetectSmells(req, t, d.segments, config);
  d.recommendation =
      Recommend(d.segments, d.findings, req.tokens, config.keywords);
  return out;
}

std::vector<LintResult> LintCorpus(const std::vector<AnnotatedRequirement> &corpus,
                                   const LintConfig &config, unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<std::size_t>(jobs, std::max<std::size_t>(corpus.size(), 1));
  std::vector<LintResult> results(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        results[i] = LintRequirement(corpus[i], config);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (std::thread &t : pool) t.join();
  }
  for (const std::exception_ptr &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace reqlint
