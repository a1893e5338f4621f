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

#include "reqlint/smells.h"

#include <algorithm>
#include <map>
#include <utility>

#include "reqlint/segmenter.h"
#include "reqlint/text_util.h"
#include "reqlint/tree_query.h"

namespace reqlint {
namespace {

bool IsBeOrHave(const Token &t) { return t.lemma == "be" || t.lemma == "have"; }

bool IsNot(const Token &t) {
  const std::string w = ToLower(t.text);
  return w == "not" || w == "n't";
}

bool IsFiniteVerb(const Token &t) {
  return t.pos == "VB" || t.pos == "VBP" || t.pos == "VBZ" || t.pos == "VBD";
}

bool PassiveSymbol(const std::string &sym, const Token &t) {
  if (sym == "v1") {
    return (t.pos == "VB" || t.pos == "VBP" || t.pos == "VBZ") && IsBeOrHave(t);
  }
  if (sym == "v2") return t.pos == "VBD" && IsBeOrHave(t);
  if (sym == "v3") return t.pos == "VBN" && t.lemma == "be";
  if (sym == "v4") return t.pos == "VBN";
  if (sym == "adv") return IsNot(t);
  return false;
}

// One element of the reduced view: a token, a run of nouns, or the end.
struct Elem {
  enum Kind { kToken, kNouns, kEnd } kind;
  TokenSpan span;
};

bool Dropped(const Token &t) {
  if (t.pos == "DT" || t.pos == "PDT" || t.pos == "POS" || t.pos == "PRP$") {
    return true;
  }
  return StartsWith(t.pos, "JJ") || StartsWith(t.pos, "RB");
}

std::vector<Elem> ReducedView(const std::vector<Token> &tokens,
                              std::size_t from, std::size_t to) {
  std::vector<Elem> out;
  for (std::size_t i = from; i < to; ++i) {
    const Token &t = tokens[i];
    if (Dropped(t)) continue;
    if (IsNoun(t)) {
      // A preposition between two noun runs joins them ("frequency in data").
      if (out.size() >= 2 && out.back().kind == Elem::kToken &&
          (tokens[out.back().span.start].pos == "IN" ||
           tokens[out.back().span.start].pos == "TO") &&
          out[out.size() - 2].kind == Elem::kNouns) {
        out.pop_back();
      }
      if (!out.empty() && out.back().kind == Elem::kNouns) {
        out.back().span.end = i + 1;
      } else {
        out.push_back({Elem::kNouns, {i, i + 1}});
      }
      continue;
    }
    out.push_back({Elem::kToken, {i, i + 1}});
  }
  out.push_back({Elem::kEnd, {to, to}});
  return out;
}

bool ReducedSymbol(const std::string &sym, const Elem &e,
                   const std::vector<Token> &tokens, const Keywords &kw) {
  if (e.kind == Elem::kEnd) return sym == "o1" || sym == "o2";
  if (sym == "n1") return e.kind == Elem::kNouns;
  if (e.kind == Elem::kNouns) return sym == "o2";
  const Token &t = tokens[e.span.start];
  const bool verbal = IsVerb(t) || IsModal(t);
  if (sym == "sc") {
    return kw.condition.count(t.lemma) || kw.subordinator.count(t.lemma);
  }
  if (sym == "md") return IsModal(t);
  if (sym == "v1") return IsFiniteVerb(t);
  if (sym == "o1" || sym == "o2") return !verbal;
  return false;
}

// Longest pattern first, then the lower number.
std::vector<const StructuralPattern *> PatternsFor(SmellKind smell) {
  std::vector<const StructuralPattern *> out;
  for (const StructuralPattern &p : BundledStructuralPatterns()) {
    if (p.smell == smell) out.push_back(&p);
  }
  std::stable_sort(out.begin(), out.end(), [](auto *a, auto *b) {
    if (a->symbols.size() != b->symbols.size()) {
      return a->symbols.size() > b->symbols.size();
    }
    return a->number < b->number;
  });
  return out;
}

std::vector<SmellFinding> MatchAnchored(SmellKind smell, std::size_t seg_index,
                                        const std::vector<Elem> &view,
                                        const std::vector<Token> &tokens,
                                        const Keywords &kw) {
  for (const StructuralPattern *p : PatternsFor(smell)) {
    if (p->symbols.size() > view.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < p->symbols.size() && ok; ++k) {
      ok = ReducedSymbol(p->symbols[k], view[k], tokens, kw);
    }
    if (!ok) continue;
    TokenSpan ev{view[0].span.start, view[0].span.end};
    for (std::size_t k = 0; k < p->symbols.size(); ++k) {
      if (view[k].kind != Elem::kEnd) ev.end = view[k].span.end;
    }
    return {{smell, seg_index, ev, Technique::Structural(p->number)}};
  }
  return {};
}

bool IsTimeCondition(const Segment &seg, const std::vector<Token> &tokens,
                     const Keywords &kw) {
  if (seg.condition_type == ConditionType::kTime) return true;
  return !seg.span.empty() && kw.time.count(tokens[seg.span.start].lemma);
}

int TechniqueRank(TechniqueKind k) { return static_cast<int>(k); }

}  // namespace

std::optional<SmellFinding> DetectIncompleteConditionTregex(
    const Segment &seg, std::size_t seg_index, const Tree &tree) {
  if (seg.kind != SegmentKind::kCondition &&
      seg.kind != SegmentKind::kNotMatched) {
    return std::nullopt;
  }
  for (const char *id : {"IC1", "IC2"}) {
    for (const Match &m : FindMatches(BundledTreePattern(id).query, tree)) {
      if (seg.span.Contains(m.span.start)) {
        return SmellFinding{SmellKind::kIncompleteCondition, seg_index, m.span,
                            Technique::Tregex(id)};
      }
    }
  }
  return std::nullopt;
}

std::vector<SmellFinding> MatchPassive(std::size_t seg_index, TokenSpan span,
                                       const std::vector<Token> &tokens) {
  for (const StructuralPattern *p : PatternsFor(SmellKind::kPassiveVoice)) {
    const std::size_t n = p->symbols.size();
    for (std::size_t i = span.start; i + n <= span.end; ++i) {
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        ok = PassiveSymbol(p->symbols[k], tokens[i + k]);
      }
      if (ok) {
        return {{SmellKind::kPassiveVoice, seg_index, {i, i + n},
                 Technique::Structural(p->number)}};
      }
    }
  }
  return {};
}

std::vector<SmellFinding> MatchIncompleteCondition(
    std::size_t seg_index, TokenSpan span, const std::vector<Token> &tokens,
    const Keywords &kw) {
  std::size_t sc = span.start;
  while (sc < span.end && !kw.condition.count(tokens[sc].lemma) &&
         !kw.subordinator.count(tokens[sc].lemma)) {
    ++sc;
  }
  if (sc == span.end) return {};
  return MatchAnchored(SmellKind::kIncompleteCondition, seg_index,
                       ReducedView(tokens, sc, span.end), tokens, kw);
}

std::vector<SmellFinding> MatchIncompleteSystemResponse(
    std::size_t seg_index, TokenSpan span, const std::vector<Token> &tokens,
    const Keywords &kw) {
  if (span.empty()) return {};
  std::size_t from = span.start;
  if (kw.system_response.count(ToLower(tokens[from].text))) ++from;
  return MatchAnchored(SmellKind::kIncompleteSystemResponse, seg_index,
                       ReducedView(tokens, from, span.end), tokens, kw);
}

std::vector<SmellFinding> MatchStructural(const Segment &seg,
                                          std::size_t seg_index,
                                          const std::vector<Token> &tokens,
                                          const Keywords &kw) {
  std::vector<SmellFinding> out;
  auto append = [&out](std::vector<SmellFinding> more) {
    for (SmellFinding &f : more) out.push_back(std::move(f));
  };
  const bool condition =
      seg.kind == SegmentKind::kCondition ||
      (seg.kind == SegmentKind::kNotMatched && seg.slot == SegmentKind::kCondition);
  const bool response = seg.kind == SegmentKind::kSystemResponse ||
                        (seg.kind == SegmentKind::kNotMatched &&
                         seg.slot == SegmentKind::kSystemResponse);
  if (seg.kind == SegmentKind::kCondition ||
      seg.kind == SegmentKind::kSystemResponse) {
    append(MatchPassive(seg_index, seg.span, tokens));
  }
  if (condition && !IsTimeCondition(seg, tokens, kw)) {
    append(MatchIncompleteCondition(seg_index, seg.span, tokens, kw));
  }
  if (response) {
    append(MatchIncompleteSystemResponse(seg_index, seg.span, tokens, kw));
  }
  return out;
}

std::vector<SegmentKind> EffectiveKinds(
    const std::vector<Segment> &segs, const std::vector<SmellFinding> &found) {
  std::vector<SegmentKind> kinds;
  for (const Segment &s : segs) kinds.push_back(s.kind);
  for (const SmellFinding &f : found) {
    if (!f.segment_index || *f.segment_index >= segs.size()) continue;
    SegmentKind &k = kinds[*f.segment_index];
    if (segs[*f.segment_index].kind != SegmentKind::kNotMatched) continue;
    if (f.kind == SmellKind::kIncompleteCondition) k = SegmentKind::kCondition;
    if (f.kind == SmellKind::kIncompleteSystemResponse &&
        k == SegmentKind::kNotMatched) {
      k = SegmentKind::kSystemResponse;
    }
  }
  return kinds;
}

std::vector<SmellFinding> ApplyRequirementRules(
    const std::vector<Segment> &segs, const std::vector<SegmentKind> &kinds,
    const std::vector<Token> &tokens) {
  std::vector<std::size_t> conds, responses;
  std::size_t scopes = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (kinds[i] == SegmentKind::kCondition) conds.push_back(i);
    if (kinds[i] == SegmentKind::kSystemResponse) responses.push_back(i);
    if (kinds[i] == SegmentKind::kScope) ++scopes;
  }
  const TokenSpan whole{0, tokens.size()};
  std::vector<SmellFinding> out;
  auto add = [&out](SmellKind kind, TokenSpan ev) {
    out.push_back({kind, std::nullopt, ev,
                   Technique::Rule(std::string(ToString(kind)))});
  };
  if (responses.size() > 1) {
    add(SmellKind::kNonAtomic, {segs[responses.front()].span.start,
                                segs[responses.back()].span.end});
  }
  if (responses.empty() && scopes + conds.size() > 0) {
    add(SmellKind::kIncompleteRequirement, whole);
  }
  if (!responses.empty()) {
    const std::size_t first_sr = segs[responses.front()].span.start;
    for (std::size_t c : conds) {
      if (segs[c].span.start > first_sr) {
        add(SmellKind::kIncorrectOrder, segs[c].span);
        break;
      }
    }
  }
  bool ambiguous = false;
  for (std::size_t k = 0; k + 1 < conds.size() && !ambiguous; ++k) {
    for (std::size_t i = segs[conds[k]].span.end;
         i < segs[conds[k + 1]].span.start; ++i) {
      if (ToLower(tokens[i].text) == "or") {
        add(SmellKind::kCoordinationAmbiguity, {i, i + 1});
        ambiguous = true;
        break;
      }
    }
  }
  if (std::all_of(kinds.begin(), kinds.end(),
                  [](SegmentKind k) { return k == SegmentKind::kNotMatched; })) {
    add(SmellKind::kNotARequirement, whole);
  }
  return out;
}

std::vector<SmellFinding> GlossaryHits(std::size_t seg_index, TokenSpan span,
                                       const std::vector<Token> &tokens,
                                       const VerbGlossary &glossary) {
  std::vector<SmellFinding> out;
  for (std::size_t i = span.start; i < span.end; ++i) {
    if (IsVerb(tokens[i]) && glossary.Contains(tokens[i].lemma)) {
      out.push_back({SmellKind::kNotPreciseVerb, seg_index, {i, i + 1},
                     Technique::Glossary(tokens[i].lemma)});
    }
  }
  return out;
}

std::vector<SmellFinding> DetectSmells(const AnnotatedRequirement &req,
                                       const Tree *tree,
                                       const std::vector<Segment> &segs,
                                       const LintConfig &config) {
  const auto &tokens = req.tokens;
  std::vector<SmellFinding> all;
  if (tree) {
    for (std::size_t i = 0; i < segs.size(); ++i) {
      if (auto f = DetectIncompleteConditionTregex(segs[i], i, *tree)) {
        all.push_back(std::move(*f));
      }
    }
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (SmellFinding &f : MatchStructural(segs[i], i, tokens, config.keywords)) {
      all.push_back(std::move(f));
    }
  }
  const std::vector<SegmentKind> kinds = EffectiveKinds(segs, all);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].kind == SegmentKind::kNotMatched &&
        kinds[i] != SegmentKind::kNotMatched) {
      for (SmellFinding &f : MatchPassive(i, segs[i].span, tokens)) {
        all.push_back(std::move(f));
      }
    }
  }
  for (SmellFinding &f : ApplyRequirementRules(segs, kinds, tokens)) {
    all.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (kinds[i] != SegmentKind::kCondition &&
        kinds[i] != SegmentKind::kSystemResponse) {
      continue;
    }
    for (SmellFinding &f : GlossaryHits(i, segs[i].span, tokens, config.glossary)) {
      all.push_back(std::move(f));
    }
  }

  std::stable_sort(all.begin(), all.end(),
                   [](const SmellFinding &a, const SmellFinding &b) {
                     return TechniqueRank(a.technique.kind) <
                            TechniqueRank(b.technique.kind);
                   });
  std::vector<SmellFinding> out;
  for (SmellFinding &f : all) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](auto &g) {
      return g.kind == f.kind && g.segment_index == f.segment_index;
    });
    if (!seen) out.push_back(std::move(f));
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](const SmellFinding &a, const SmellFinding &b) {
                     const std::size_t sa = a.segment_index.value_or(segs.size());
                     const std::size_t sb = b.segment_index.value_or(segs.size());
                     return sa < sb;
                   });
  return out;
}

}  // namespace reqlint
