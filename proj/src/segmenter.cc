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

#include "reqlint/segmenter.h"

#include <algorithm>
#include <optional>

#include "reqlint/catalog.h"
#include "reqlint/error.h"
#include "reqlint/text_util.h"
#include "reqlint/tree_query.h"

namespace reqlint {
namespace {

// Patterns that produce segments, in priority order.
constexpr const char *kSegmentPatterns[] = {"SC1", "SC2", "C1", "C2", "C3", "C4",
                                            "C5",  "C6",  "C7", "C8", "SR1"};

struct Candidate {
  SegmentKind kind;
  TokenSpan span;
  std::string pattern;
  std::size_t order;  // position in kSegmentPatterns
};

SegmentKind KindForRole(const std::string &role) {
  if (role == "scope") return SegmentKind::kScope;
  if (role == "system_response") return SegmentKind::kSystemResponse;
  return SegmentKind::kCondition;
}

TokenSpan TrimSeparators(const std::vector<Token> &tokens, TokenSpan span) {
  while (span.start < span.end && IsSeparator(tokens[span.start])) ++span.start;
  while (span.end > span.start && IsSeparator(tokens[span.end - 1])) --span.end;
  return span;
}

// Outermost first: earlier start, then longer span, then pattern order.
bool Outer(const Candidate &a, const Candidate &b) {
  if (a.span.start != b.span.start) return a.span.start < b.span.start;
  if (a.span.size() != b.span.size()) return a.span.size() > b.span.size();
  return a.order < b.order;
}

bool OverlapsAny(TokenSpan span, const std::vector<Segment> &segs) {
  for (const Segment &s : segs) {
    if (s.span.Overlaps(span)) return true;
  }
  return false;
}

bool IsConjunctSeparator(const Tree &tree, NodeId id) {
  const std::string &label = tree.node(id).label;
  return label == "CC" || label == ",";
}

// VP conjuncts of `children` when they read VP (CC|,)+ VP ...; else empty.
std::vector<NodeId> Conjuncts(const Tree &tree,
                              const std::vector<NodeId> &children) {
  std::vector<NodeId> vps;
  bool saw_separator = false;
  for (NodeId c : children) {
    if (tree.node(c).label == "VP") {
      vps.push_back(c);
    } else if (IsConjunctSeparator(tree, c)) {
      if (vps.empty()) return {};
      saw_separator = true;
    } else {
      return {};
    }
  }
  if (vps.size() < 2 || !saw_separator) return {};
  return vps;
}

// Splits a system-response match (actor NP plus modal VP) at coordinated
// verb phrases under the modal.
std::vector<TokenSpan> SplitCoordinated(const Tree &tree, NodeId np,
                                        TokenSpan extent) {
  const TreeNode &n = tree.node(np);
  if (n.parent == kNoNode) return {extent};
  const auto &sibs = tree.node(n.parent).children;
  if (n.child_index + 1 >= sibs.size()) return {extent};
  const TreeNode &vp = tree.node(sibs[n.child_index + 1]);
  std::size_t k = 0;
  while (k < vp.children.size() && tree.node(vp.children[k]).label != "MD") ++k;
  if (k == vp.children.size()) return {extent};
  std::vector<NodeId> rest;
  for (std::size_t i = k + 1; i < vp.children.size(); ++i) {
    const std::string &label = tree.node(vp.children[i]).label;
    if (rest.empty() && (label == "ADVP" || StartsWith(label, "RB"))) continue;
    rest.push_back(vp.children[i]);
  }
  std::vector<NodeId> conj;
  if (rest.size() == 1 && tree.node(rest[0]).label == "VP") {
    conj = Conjuncts(tree, tree.node(rest[0]).children);
  } else {
    conj = Conjuncts(tree, rest);
  }
  if (conj.empty()) return {extent};
  std::vector<TokenSpan> pieces;
  pieces.push_back({extent.start, tree.node(conj[0]).span.end});
  for (std::size_t i = 1; i < conj.size(); ++i) {
    pieces.push_back(tree.node(conj[i]).span);
  }
  return pieces;
}

enum class Starter { kNone, kCondition, kScope, kSystemResponse };

struct Piece {
  TokenSpan span;
  Starter starter = Starter::kNone;
  bool token_starter = false;  // starter is the first token, not a mark
  bool valid = false;
};

Starter KeywordStarter(const Token &t, const Keywords &kw) {
  const std::string w = ToLower(t.text);
  if (kw.condition.count(w)) return Starter::kCondition;
  if (kw.scope.count(w)) return Starter::kScope;
  if (kw.system_response.count(w)) return Starter::kSystemResponse;
  return Starter::kNone;
}

bool IsStarterToken(const Token &t, const Keywords &kw) {
  return KeywordStarter(t, kw) != Starter::kNone;
}

bool Validate(const std::vector<Token> &tokens, const Piece &p,
              const Keywords &kw) {
  switch (p.starter) {
    case Starter::kScope:
      return HasScopeContent(tokens, p.span, kw);
    case Starter::kCondition:
      return HasConditionContent(tokens, p.span, p.token_starter);
    case Starter::kSystemResponse:
      return HasSystemResponseContent(tokens, p.span, p.token_starter);
    case Starter::kNone:
      return HasSystemResponseContent(tokens, p.span, false);
  }
  return false;
}

SegmentKind KindOf(Starter s) {
  switch (s) {
    case Starter::kScope:
      return SegmentKind::kScope;
    case Starter::kCondition:
      return SegmentKind::kCondition;
    default:
      return SegmentKind::kSystemResponse;
  }
}

bool FrontsCondition(const Segment &s) {
  return s.kind == SegmentKind::kScope || s.kind == SegmentKind::kCondition ||
         (s.kind == SegmentKind::kNotMatched &&
          (s.slot == SegmentKind::kCondition || s.slot == SegmentKind::kScope));
}

bool HasLemmaSequence(const std::vector<Token> &tokens, TokenSpan span,
                      const std::vector<std::string> &seq) {
  if (seq.empty() || span.size() < seq.size()) return false;
  for (std::size_t i = span.start; i + seq.size() <= span.end; ++i) {
    bool ok = true;
    for (std::size_t k = 0; k < seq.size() && ok; ++k) {
      ok = tokens[i + k].lemma == seq[k];
    }
    if (ok) return true;
  }
  return false;
}

// Main-verb use: an auxiliary is followed, past adverbs, by VBN or VBG.
bool IsAuxiliary(const std::vector<Token> &tokens, std::size_t i,
                 std::size_t end) {
  std::size_t j = i + 1;
  while (j < end && StartsWith(tokens[j].pos, "RB")) ++j;
  return j < end && (tokens[j].pos == "VBN" || tokens[j].pos == "VBG");
}

}  // namespace

bool IsSeparator(const Token &t) {
  static const char *kTags[] = {",", ".", ":", "``", "''", "-LRB-", "-RRB-",
                                "CC"};
  for (const char *tag : kTags) {
    if (t.pos == tag) return true;
  }
  return false;
}

bool IsNoun(const Token &t) {
  return StartsWith(t.pos, "NN") || t.pos == "PRP";
}

bool IsVerb(const Token &t) { return StartsWith(t.pos, "VB"); }

bool IsModal(const Token &t) { return t.pos == "MD"; }

bool HasScopeContent(const std::vector<Token> &tokens, TokenSpan span,
                     const Keywords &kw) {
  if (span.empty() || !kw.scope.count(ToLower(tokens[span.start].text))) {
    return false;
  }
  std::size_t i = span.start + 1;
  while (i < span.end && !kw.quantifier.count(tokens[i].lemma)) ++i;
  for (++i; i < span.end; ++i) {
    if (IsNoun(tokens[i])) return true;
  }
  return false;
}

bool HasConditionContent(const std::vector<Token> &tokens, TokenSpan span,
                         bool skip_starter) {
  std::size_t i = span.start + (skip_starter ? 1 : 0);
  while (i < span.end && !IsNoun(tokens[i])) ++i;
  for (++i; i < span.end; ++i) {
    if (IsVerb(tokens[i])) return true;
  }
  return false;
}

bool HasSystemResponseContent(const std::vector<Token> &tokens, TokenSpan span,
                              bool skip_starter) {
  std::size_t i = span.start + (skip_starter ? 1 : 0);
  while (i < span.end && !IsNoun(tokens[i])) ++i;
  while (i < span.end && !IsModal(tokens[i])) ++i;
  for (++i; i < span.end; ++i) {
    if (IsVerb(tokens[i])) return true;
  }
  return false;
}

ConditionType ClassifyCondition(const Segment &seg,
                                const std::vector<Token> &tokens,
                                const Keywords &kw) {
  const TokenSpan span = seg.span;
  if (span.empty()) return ConditionType::kUnknown;
  if (seg.source.kind == SegmentSourceKind::kTregex &&
      seg.source.pattern_id == "C8") {
    return ConditionType::kTime;
  }
  if (kw.time.count(tokens[span.start].lemma)) return ConditionType::kTime;
  bool any_verb = false;
  for (const auto &op : kw.operators) {
    if (op.size() > 1 && HasLemmaSequence(tokens, span, op)) {
      return ConditionType::kPrecondition;
    }
  }
  for (std::size_t i = span.start; i < span.end; ++i) {
    if (!IsVerb(tokens[i])) continue;
    any_verb = true;
    for (const auto &op : kw.operators) {
      if (op.size() == 1 && tokens[i].lemma == op[0] &&
          !IsAuxiliary(tokens, i, span.end)) {
        return ConditionType::kPrecondition;
      }
    }
  }
  return any_verb ? ConditionType::kTrigger : ConditionType::kUnknown;
}

std::vector<Segment> SplitRun(const AnnotatedRequirement &req, TokenSpan run,
                              const std::vector<Segment> &preceding,
                              const Keywords &kw) {
  const auto &tokens = req.tokens;
  std::vector<Piece> pieces;
  for (std::size_t i = run.start; i < run.end; ++i) {
    Starter s = KeywordStarter(tokens[i], kw);
    bool token_starter = s != Starter::kNone;
    if (!token_starter) {
      for (const LayoutMark &m : req.marks) {
        if (m.before_token != i || i == run.start) continue;
        if ((m.kind == LayoutMarkKind::kLineBreak && kw.line_break_starts_sr()) ||
            (m.kind == LayoutMarkKind::kBullet && kw.bullet_starts_sr())) {
          s = Starter::kSystemResponse;
        }
      }
    }
    if (s == Starter::kNone) {
      if (pieces.empty()) pieces.push_back({{i, i + 1}, s, false});
      else pieces.back().span.end = i + 1;
      continue;
    }
    pieces.push_back({{i, i + 1}, s, token_starter});
  }

  // A bare starter keyword joins the piece after it.
  for (std::size_t i = 0; i + 1 < pieces.size();) {
    if (pieces[i].token_starter && pieces[i].span.size() == 1) {
      pieces[i].span.end = pieces[i + 1].span.end;
      pieces.erase(pieces.begin() + i + 1);
    } else {
      ++i;
    }
  }
  for (Piece &p : pieces) {
    p.span = {p.span.start, TrimSeparators(tokens, p.span).end};
    p.valid = Validate(tokens, p, kw);
  }
  // A failed cut at the scope keyword is undone.
  for (std::size_t i = 1; i < pieces.size();) {
    if (pieces[i].starter == Starter::kScope && !pieces[i].valid) {
      pieces[i - 1].span.end = pieces[i].span.end;
      pieces[i - 1].valid = Validate(tokens, pieces[i - 1], kw);
      pieces.erase(pieces.begin() + i);
    } else {
      ++i;
    }
  }

  std::vector<Segment> out;
  for (const Piece &p : pieces) {
    bool only_filler = true;
    for (std::size_t i = p.span.start; i < p.span.end && only_filler; ++i) {
      only_filler = IsSeparator(tokens[i]) || IsStarterToken(tokens[i], kw);
    }
    if (p.span.empty() || only_filler) continue;
    Segment seg;
    seg.span = p.span;
    if (p.valid) {
      seg.kind = KindOf(p.starter);
      seg.source = {SegmentSourceKind::kSplitter, {}};
      if (seg.kind == SegmentKind::kCondition) {
        seg.condition_type = ClassifyCondition(seg, tokens, kw);
      }
      out.push_back(std::move(seg));
      continue;
    }
    seg.kind = SegmentKind::kNotMatched;
    seg.source = {SegmentSourceKind::kResidual, {}};
    if (p.starter != Starter::kNone) {
      seg.slot = KindOf(p.starter);
    } else {
      const std::string &first = tokens[p.span.start].lemma;
      if (kw.condition.count(first) || kw.subordinator.count(first)) {
        seg.slot = SegmentKind::kCondition;
      } else {
        bool fronted = false;
        for (const Segment &s : preceding) fronted |= FrontsCondition(s);
        for (const Segment &s : out) fronted |= FrontsCondition(s);
        if (fronted) seg.slot = SegmentKind::kSystemResponse;
      }
    }
    out.push_back(std::move(seg));
  }
  return out;
}

std::vector<Segment> SegmentRequirement(const AnnotatedRequirement &req,
                                        const Tree *tree, const Keywords &kw) {
  const auto &tokens = req.tokens;
  if (tokens.empty()) throw DataError("no tokens", 0, req.id);

  std::vector<Candidate> claims, responses;
  std::vector<std::pair<NodeId, Candidate>> sr_matches;
  if (tree) {
    for (std::size_t order = 0; order < std::size(kSegmentPatterns); ++order) {
      const TreePattern &p = BundledTreePattern(kSegmentPatterns[order]);
      for (const Match &m : FindMatches(p.query, *tree)) {
        TokenSpan extent = TrimSeparators(
            tokens, SisterChainExtent(p.query.root(), *tree, m.node));
        if (extent.empty()) continue;
        Candidate c{KindForRole(p.role), extent, p.id, order};
        if (c.kind == SegmentKind::kSystemResponse) {
          sr_matches.emplace_back(m.node, c);
        } else {
          claims.push_back(c);
        }
      }
    }
  }

  std::vector<Segment> segs;
  std::stable_sort(claims.begin(), claims.end(), Outer);
  for (const Candidate &c : claims) {
    if (OverlapsAny(c.span, segs)) continue;
    Segment s;
    s.kind = c.kind;
    s.span = c.span;
    s.source = {SegmentSourceKind::kTregex, c.pattern};
    segs.push_back(std::move(s));
  }

  for (const auto &[np, c] : sr_matches) {
    for (TokenSpan piece : SplitCoordinated(*tree, np, c.span)) {
      bool dropped = false;
      for (const Segment &s : segs) {
        if (s.span.Contains(piece.start)) dropped = true;
        if (s.span.start > piece.start && s.span.start < piece.end) {
          piece.end = s.span.start;
        }
      }
      piece = TrimSeparators(tokens, piece);
      if (dropped || piece.empty()) continue;
      responses.push_back({SegmentKind::kSystemResponse, piece, c.pattern,
                           c.order});
    }
  }
  std::stable_sort(responses.begin(), responses.end(), Outer);
  const std::size_t claimed = segs.size();
  for (const Candidate &c : responses) {
    if (OverlapsAny(c.span, segs)) continue;
    Segment s;
    s.kind = c.kind;
    s.span = c.span;
    s.source = {SegmentSourceKind::kTregex, c.pattern};
    segs.push_back(std::move(s));
  }
  (void)claimed;
  auto by_start = [](const Segment &a, const Segment &b) {
    return a.span.start < b.span.start;
  };
  std::sort(segs.begin(), segs.end(), by_start);

  // Uncovered runs, left to right.
  std::vector<Segment> out;
  std::size_t next = 0, cursor = 0;
  auto flush_run = [&](std::size_t from, std::size_t to) {
    TokenSpan run = TrimSeparators(tokens, {from, to});
    if (run.empty()) return;
    for (Segment &s : SplitRun(req, run, out, kw)) out.push_back(std::move(s));
  };
  while (cursor < tokens.size()) {
    if (next < segs.size() && segs[next].span.start == cursor) {
      cursor = segs[next].span.end;
      out.push_back(segs[next++]);
      continue;
    }
    const std::size_t stop =
        next < segs.size() ? segs[next].span.start : tokens.size();
    flush_run(cursor, stop);
    cursor = stop;
  }

  for (Segment &s : out) {
    if (s.kind == SegmentKind::kCondition && !s.condition_type) {
      s.condition_type = ClassifyCondition(s, tokens, kw);
    }
  }
  std::sort(out.begin(), out.end(), by_start);
  return out;
}

std::vector<Segment> SegmentRequirement(const AnnotatedRequirement &req,
                                        const Keywords &kw) {
  if (!req.tree) return SegmentRequirement(req, nullptr, kw);
  const Tree tree = ParseTree(*req.tree);
  return SegmentRequirement(req, &tree, kw);
}

}  // namespace reqlint
