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

#include "reqlint/tree_query.h"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <utility>

#include "reqlint/error.h"

namespace reqlint {
namespace {

constexpr std::pair<RelationOp, std::string_view> kOpNames[] = {
    {RelationOp::kParentOf, "<"},
    {RelationOp::kChildOf, ">"},
    {RelationOp::kDominates, "<<"},
    {RelationOp::kDominatedBy, ">>"},
    {RelationOp::kFirstChild, "<,"},
    {RelationOp::kLeftmostDescendant, "<<,"},
    {RelationOp::kLastChildOf, ">-"},
    {RelationOp::kImmLeftSister, "$+"},
    {RelationOp::kImmRightSister, "$-"},
    {RelationOp::kLeftSister, "$++"},
    {RelationOp::kRightSister, "$--"},
};

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }
bool IsOpChar(char c) { return std::strchr("<>$+-,", c) != nullptr && c; }
bool IsWordChar(char c) {
  return !IsSpace(c) && std::strchr("()[]|&!?/", c) == nullptr;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = std::tolower(static_cast<unsigned char>(c));
  return out;
}

// Mutable AST used while parsing; frozen into shared_ptr<const> nodes.
class Compiler {
 public:
  explicit Compiler(std::string_view text) : text_(text) {}

  std::shared_ptr<QueryNode> Run() {
    auto root = ParseExpr();
    SkipSpace();
    if (pos_ < text_.size()) Fail("unexpected input");
    return root;
  }

 private:
  [[noreturn]] void Fail(const std::string &what) const {
    throw ParseError(what, pos_);
  }

  void SkipSpace() {
    while (pos_ < text_.size() && IsSpace(text_[pos_])) ++pos_;
  }

  char Peek() {
    SkipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Character after the current one, skipping whitespace.
  char PeekAfter() {
    SkipSpace();
    std::size_t p = pos_ + 1;
    while (p < text_.size() && IsSpace(text_[p])) ++p;
    return p < text_.size() ? text_[p] : '\0';
  }

  bool AtItem() {
    const char c = Peek();
    if (c == '?' || c == '[') return true;
    if (c == '!') return IsOpChar(PeekAfter());
    return IsOpChar(c);
  }

  std::shared_ptr<QueryNode> ParseExpr() {
    auto head = ParsePrimary();
    ParseChain(head.get(), /*in_group=*/false);
    return head;
  }

  std::shared_ptr<QueryNode> ParsePrimary() {
    if (Peek() == '(') {
      ++pos_;
      auto inner = ParseExpr();
      if (Peek() != ')') Fail("expected ')'");
      ++pos_;
      return inner;
    }
    auto node = std::make_shared<QueryNode>();
    node->description = ParseDescription();
    return node;
  }

  NodeDescription ParseDescription() {
    NodeDescription d;
    if (Peek() == '!') {
      d.negated = true;
      ++pos_;
      SkipSpace();
    }
    if (pos_ >= text_.size()) Fail("empty node description");
    if (text_[pos_] == '/') {
      const std::size_t start = pos_++;
      std::string body;
      while (pos_ < text_.size() && text_[pos_] != '/') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
          body += text_[pos_++];
        }
        if (IsSpace(text_[pos_])) Fail("whitespace inside regex");
        body += text_[pos_++];
      }
      if (pos_ >= text_.size()) {
        pos_ = start;
        Fail("unterminated regex");
      }
      ++pos_;
      if (body.empty()) {
        pos_ = start;
        Fail("empty node description");
      }
      d.kind = NodeDescription::Kind::kRegex;
      d.value = body;
      try {
        d.regex = std::make_shared<const std::regex>(body);
        d.regex_icase =
            std::make_shared<const std::regex>(body, std::regex::icase);
      } catch (const std::regex_error &) {
        pos_ = start;
        Fail("invalid regex");
      }
      return d;
    }
    const std::size_t start = pos_;
    if (!IsOpChar(text_[pos_])) {
      while (pos_ < text_.size() && IsWordChar(text_[pos_])) ++pos_;
    }
    if (pos_ == start) Fail("empty node description");
    d.kind = NodeDescription::Kind::kLiteral;
    d.value = std::string(text_.substr(start, pos_ - start));
    return d;
  }

  // Items attach to `host`. Returns at ')', ']', end of input or any token
  // that cannot start an item.
  void ParseChain(QueryNode *host, bool in_group) {
    std::vector<std::vector<Constraint>> alts(1);
    for (;;) {
      const char c = Peek();
      if (c == '|') {
        if (alts.back().empty()) Fail("empty alternative");
        ++pos_;
        alts.emplace_back();
        if (!AtItem()) Fail("expected relation");
        continue;
      }
      if (c == '&') {
        if (alts.back().empty()) Fail("'&' without left operand");
        ++pos_;
        if (!AtItem()) Fail("expected relation");
        continue;
      }
      if (!AtItem()) break;
      alts.back().push_back(ParseItem());
    }
    if (in_group) {
      if (alts.back().empty()) Fail("empty group");
      host->constraints.push_back(Constraint{Disjunction{std::move(alts)}});
      return;
    }
    if (alts.size() == 1) {
      for (auto &c : alts[0]) host->constraints.push_back(std::move(c));
    } else {
      host->constraints.push_back(Constraint{Disjunction{std::move(alts)}});
    }
  }

  Constraint ParseItem() {
    if (Peek() == '[') {
      const std::size_t open = pos_++;
      QueryNode holder;
      ParseChain(&holder, /*in_group=*/true);
      if (Peek() != ']') {
        if (pos_ >= text_.size()) pos_ = open;
        Fail("expected ']'");
      }
      ++pos_;
      return std::move(holder.constraints.front());
    }
    Relation rel;
    if (Peek() == '!') {
      rel.negated = true;
      ++pos_;
    } else if (Peek() == '?') {
      rel.optional = true;
      ++pos_;
    }
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && IsOpChar(text_[pos_])) ++pos_;
    auto op = ParseRelationOp(text_.substr(start, pos_ - start));
    if (!op) {
      pos_ = start;
      Fail("unknown relation '" +
           std::string(text_.substr(start, std::max<std::size_t>(
                                               1, pos_ - start))) +
           "'");
    }
    rel.op = *op;
    rel.target = ParseTarget();
    return Constraint{std::move(rel)};
  }

  std::shared_ptr<const QueryNode> ParseTarget() {
    if (Peek() == '(') {
      ++pos_;
      auto inner = ParseExpr();
      if (Peek() != ')') Fail("expected ')'");
      ++pos_;
      return inner;
    }
    auto node = std::make_shared<QueryNode>();
    node->description = ParseDescription();
    if (AtItem()) node->constraints.push_back(ParseItem());
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Evaluator {
 public:
  explicit Evaluator(const Tree &tree) : tree_(tree) {}

  bool Sat(const QueryNode &q, NodeId n) {
    auto key = std::make_pair(&q, n);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool ok = q.description.Matches(tree_.node(n)) && AllOf(q.constraints, n);
    memo_.emplace(key, ok);
    return ok;
  }

 private:
  bool AllOf(const std::vector<Constraint> &cs, NodeId n) {
    for (const Constraint &c : cs) {
      if (!Holds(c, n)) return false;
    }
    return true;
  }

  bool Holds(const Constraint &c, NodeId n) {
    if (const auto *d = std::get_if<Disjunction>(&c.item)) {
      for (const auto &alt : d->alternatives) {
        if (AllOf(alt, n)) return true;
      }
      return false;
    }
    const auto &rel = std::get<Relation>(c.item);
    if (rel.optional) return true;
    bool found = false;
    for (NodeId m : RelatedNodes(rel.op, tree_, n)) {
      if (Sat(*rel.target, m)) {
        found = true;
        break;
      }
    }
    return found != rel.negated;
  }

  const Tree &tree_;
  std::map<std::pair<const QueryNode *, NodeId>, bool> memo_;
};

void Debug(const QueryNode &q, std::string *out);

void DebugConstraints(const std::vector<Constraint> &cs, std::string *out) {
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i > 0) *out += ' ';
    if (const auto *d = std::get_if<Disjunction>(&cs[i].item)) {
      *out += '[';
      for (std::size_t a = 0; a < d->alternatives.size(); ++a) {
        if (a > 0) *out += " | ";
        DebugConstraints(d->alternatives[a], out);
      }
      *out += ']';
      continue;
    }
    const auto &rel = std::get<Relation>(cs[i].item);
    if (rel.negated) *out += '!';
    if (rel.optional) *out += '?';
    *out += ToString(rel.op);
    *out += ' ';
    Debug(*rel.target, out);
  }
}

void Debug(const QueryNode &q, std::string *out) {
  if (q.description.negated) *out += '!';
  if (q.description.kind == NodeDescription::Kind::kRegex) {
    *out += '/' + q.description.value + '/';
  } else {
    *out += q.description.value;
  }
  if (q.constraints.empty()) return;
  *out += '{';
  DebugConstraints(q.constraints, out);
  *out += '}';
}

}  // namespace

std::string_view ToString(RelationOp op) {
  for (const auto &[o, name] : kOpNames) {
    if (o == op) return name;
  }
  return "?";
}

std::optional<RelationOp> ParseRelationOp(std::string_view token) {
  for (const auto &[o, name] : kOpNames) {
    if (name == token) return o;
  }
  return std::nullopt;
}

bool NodeDescription::Matches(const TreeNode &node) const {
  bool hit;
  if (kind == Kind::kLiteral) {
    hit = node.IsLeaf() ? Lower(node.label) == Lower(value)
                        : node.label == value;
  } else {
    hit = std::regex_search(node.label, node.IsLeaf() ? *regex_icase : *regex);
  }
  return hit != negated;
}

Query Query::Compile(std::string_view text) {
  return Query(Compiler(text).Run(), std::string(text));
}

std::vector<NodeId> RelatedNodes(RelationOp op, const Tree &tree, NodeId a) {
  std::vector<NodeId> out;
  const TreeNode &n = tree.node(a);
  const NodeId parent = n.parent;
  const std::vector<NodeId> *sibs =
      parent == kNoNode ? nullptr : &tree.node(parent).children;
  switch (op) {
    case RelationOp::kParentOf:
      out = n.children;
      break;
    case RelationOp::kChildOf:
      if (parent != kNoNode) out.push_back(parent);
      break;
    case RelationOp::kDominates: {
      // Pre-order ids: descendants are the contiguous id range after `a`.
      NodeId last = a;
      while (!tree.node(last).children.empty()) {
        last = tree.node(last).children.back();
      }
      for (NodeId d = a + 1; d <= last; ++d) out.push_back(d);
      break;
    }
    case RelationOp::kDominatedBy:
      for (NodeId p = parent; p != kNoNode; p = tree.node(p).parent) {
        out.push_back(p);
      }
      std::reverse(out.begin(), out.end());
      break;
    case RelationOp::kFirstChild:
      if (!n.children.empty()) out.push_back(n.children.front());
      break;
    case RelationOp::kLeftmostDescendant:
      for (NodeId d = a; !tree.node(d).children.empty();) {
        d = tree.node(d).children.front();
        out.push_back(d);
      }
      break;
    case RelationOp::kLastChildOf:
      if (sibs && n.child_index + 1 == sibs->size()) out.push_back(parent);
      break;
    case RelationOp::kImmLeftSister:
      if (sibs && n.child_index + 1 < sibs->size()) {
        out.push_back((*sibs)[n.child_index + 1]);
      }
      break;
    case RelationOp::kImmRightSister:
      if (sibs && n.child_index > 0) out.push_back((*sibs)[n.child_index - 1]);
      break;
    case RelationOp::kLeftSister:
      if (sibs) {
        out.assign(sibs->begin() + n.child_index + 1, sibs->end());
      }
      break;
    case RelationOp::kRightSister:
      if (sibs) out.assign(sibs->begin(), sibs->begin() + n.child_index);
      break;
  }
  return out;
}

bool Satisfies(const QueryNode &q, const Tree &tree, NodeId node) {
  return Evaluator(tree).Sat(q, node);
}

std::vector<Match> FindMatches(const Query &query, const Tree &tree) {
  std::vector<Match> out;
  Evaluator eval(tree);
  for (NodeId id = 0; id < tree.size(); ++id) {
    if (eval.Sat(query.root(), id)) out.push_back({id, tree.node(id).span});
  }
  return out;
}

TokenSpan SisterChainExtent(const QueryNode &q, const Tree &tree,
                            NodeId node) {
  TokenSpan span = tree.node(node).span;
  for (const Constraint &c : q.constraints) {
    const auto *rel = std::get_if<Relation>(&c.item);
    if (!rel || rel->negated || rel->optional ||
        rel->op != RelationOp::kImmLeftSister) {
      continue;
    }
    auto sister = RelatedNodes(rel->op, tree, node);
    if (sister.empty() || !Satisfies(*rel->target, tree, sister[0])) continue;
    TokenSpan ext = SisterChainExtent(*rel->target, tree, sister[0]);
    span.end = std::max(span.end, ext.end);
  }
  return span;
}

std::string DebugString(const QueryNode &q) {
  std::string out;
  Debug(q, &out);
  return out;
}

}  // namespace reqlint
