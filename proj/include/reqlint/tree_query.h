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

// A Tregex-style query language over constituency trees.
//
//   expr    := primary chain
//   primary := '(' expr ')' | desc
//   desc    := ['!'] (WORD | '/' REGEX '/')
//   chain   := conj ('|' conj)*          conj := item (['&'] item)*
//   item    := ['!' | '?'] RELOP target | '[' chain ']'
//   target  := '(' expr ')' | desc [item]
//
// Every item of a chain constrains the chain's head node. An item written
// directly after an unparenthesized target constrains that target instead:
// "A < B $+ C" reads as A < (B $+ C).
//
// Relations, host A and target B:
//   A < B    B is a child of A         A > B    A is a child of B
//   A << B   A properly dominates B    A >> B   B properly dominates A
//   A <, B   B is A's first child      A <<, B  B is a leftmost descendant
//   A >- B   A is B's last child
//   A $+ B   B is A's immediate right sister;  A $- B  the converse
//   A $++ B  B is a right sister of A;         A $-- B  B is a left sister

#ifndef REQLINT_TREE_QUERY_H_
#define REQLINT_TREE_QUERY_H_

#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reqlint/model.h"
#include "reqlint/ptb_tree.h"

namespace reqlint {

enum class RelationOp {
  kParentOf,            // <
  kChildOf,             // >
  kDominates,           // <<
  kDominatedBy,         // >>
  kFirstChild,          // <,
  kLeftmostDescendant,  // <<,
  kLastChildOf,         // >-
  kImmLeftSister,       // $+
  kImmRightSister,      // $-
  kLeftSister,          // $++
  kRightSister,         // $--
};

inline constexpr RelationOp kAllRelationOps[] = {
    RelationOp::kParentOf,           RelationOp::kChildOf,
    RelationOp::kDominates,          RelationOp::kDominatedBy,
    RelationOp::kFirstChild,         RelationOp::kLeftmostDescendant,
    RelationOp::kLastChildOf,        RelationOp::kImmLeftSister,
    RelationOp::kImmRightSister,     RelationOp::kLeftSister,
    RelationOp::kRightSister,
};

std::string_view ToString(RelationOp op);
std::optional<RelationOp> ParseRelationOp(std::string_view token);

struct NodeDescription {
  enum class Kind { kLiteral, kRegex };

  Kind kind = Kind::kLiteral;
  std::string value;
  bool negated = false;

  // Compiled forms for regex descriptions; leaves match case-insensitively.
  std::shared_ptr<const std::regex> regex;
  std::shared_ptr<const std::regex> regex_icase;

  bool Matches(const TreeNode &node) const;
};

struct QueryNode;

struct Relation {
  RelationOp op = RelationOp::kParentOf;
  bool negated = false;
  bool optional = false;
  std::shared_ptr<const QueryNode> target;
};

struct Constraint;

struct Disjunction {
  std::vector<std::vector<Constraint>> alternatives;
};

struct Constraint {
  std::variant<Relation, Disjunction> item;
};

struct QueryNode {
  NodeDescription description;
  std::vector<Constraint> constraints;  // conjunction
};

struct Match {
  NodeId node = kNoNode;
  TokenSpan span;

  friend bool operator==(const Match &, const Match &) = default;
};

class Query {
 public:
  // Throws ParseError with the byte offset of the problem.
  static Query Compile(std::string_view text);

  const QueryNode &root() const { return *root_; }
  const std::string &text() const { return text_; }

 private:
  Query(std::shared_ptr<const QueryNode> root, std::string text)
      : root_(std::move(root)), text_(std::move(text)) {}

  std::shared_ptr<const QueryNode> root_;
  std::string text_;
};

// Pre-order list of tree nodes satisfying the query.
std::vector<Match> FindMatches(const Query &query, const Tree &tree);

// True when `node` satisfies `q` (description and all constraints).
bool Satisfies(const QueryNode &q, const Tree &tree, NodeId node);

// Nodes B with `a op B`, in tree order.
std::vector<NodeId> RelatedNodes(RelationOp op, const Tree &tree, NodeId a);

// The matched node's span extended through its chain of plain top-level
// `$+` targets (e.g. WHADVP $+ S covers both constituents).
TokenSpan SisterChainExtent(const QueryNode &q, const Tree &tree,
                            NodeId node);

// Compact bracketed rendering of the AST for diagnostics and tests, e.g.
// "SBAR{< WHADVP{$+ S{< NP{$++ VP}}}}".
std::string DebugString(const QueryNode &q);

}  // namespace reqlint

#endif  // REQLINT_TREE_QUERY_H_
