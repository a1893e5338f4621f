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

#include "reqlint/ptb_tree.h"

#include <cctype>
#include <utility>

#include "reqlint/error.h"

namespace reqlint {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Tree::Spec ParseAll() {
    SkipSpace();
    if (pos_ >= text_.size()) throw ParseError("empty tree", pos_);
    Tree::Spec spec = ParseNode();
    SkipSpace();
    if (pos_ < text_.size()) throw ParseError("trailing input", pos_);
    return spec;
  }

 private:
  Tree::Spec ParseNode() {
    SkipSpace();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (text_[pos_] == ')') throw ParseError("unexpected ')'", pos_);
    if (text_[pos_] != '(') return Tree::Leaf(ReadAtom());

    const std::size_t open = pos_++;
    SkipSpace();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (text_[pos_] == '(' || text_[pos_] == ')') {
      throw ParseError("missing constituent label", pos_);
    }
    Tree::Spec spec{ReadAtom(), {}};
    for (;;) {
      SkipSpace();
      if (pos_ >= text_.size()) {
        throw ParseError("unexpected end of input", pos_);
      }
      if (text_[pos_] == ')') break;
      spec.children.push_back(ParseNode());
    }
    if (spec.children.empty()) throw ParseError("empty constituent", open);
    ++pos_;
    return spec;
  }

  std::string ReadAtom() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !IsSpace(text_[pos_]) && text_[pos_] != '(' &&
           text_[pos_] != ')') {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void SkipSpace() {
    while (pos_ < text_.size() && IsSpace(text_[pos_])) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void Render(const Tree &tree, NodeId id, std::string *out) {
  const TreeNode &n = tree.node(id);
  if (n.IsLeaf()) {
    *out += n.label;
    return;
  }
  *out += '(';
  *out += n.label;
  for (NodeId c : n.children) {
    *out += ' ';
    Render(tree, c, out);
  }
  *out += ')';
}

bool SameShape(const Tree &a, NodeId x, const Tree &b, NodeId y) {
  const TreeNode &p = a.node(x);
  const TreeNode &q = b.node(y);
  if (p.label != q.label || p.children.size() != q.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < p.children.size(); ++i) {
    if (!SameShape(a, p.children[i], b, q.children[i])) return false;
  }
  return true;
}

}  // namespace

Tree::Tree(const Spec &spec) {
  std::size_t next_leaf = 0;
  Add(spec, kNoNode, 0, &next_leaf);
}

NodeId Tree::Add(const Spec &spec, NodeId parent, std::size_t child_index,
                 std::size_t *next_leaf) {
  const NodeId id = nodes_.size();
  nodes_.push_back(TreeNode{spec.label, parent, {}, child_index, {}});
  const std::size_t start = *next_leaf;
  if (spec.children.empty()) ++*next_leaf;
  for (std::size_t i = 0; i < spec.children.size(); ++i) {
    NodeId c = Add(spec.children[i], id, i, next_leaf);
    nodes_[id].children.push_back(c);
  }
  nodes_[id].span = {start, *next_leaf};
  return id;
}

bool Tree::IsPreterminal(NodeId id) const {
  const TreeNode &n = nodes_[id];
  return n.children.size() == 1 && nodes_[n.children[0]].IsLeaf();
}

bool operator==(const Tree &a, const Tree &b) {
  if (a.size() != b.size()) return false;
  if (a.size() == 0) return true;
  return SameShape(a, a.root(), b, b.root());
}

Tree ParseTree(std::string_view text) {
  return Tree(Parser(text).ParseAll());
}

std::string RenderTree(const Tree &tree, NodeId id) {
  std::string out;
  if (tree.size() > 0) Render(tree, id, &out);
  return out;
}

std::vector<NodeId> Leaves(const Tree &tree, NodeId id) {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    const auto &kids = tree.node(n).children;
    if (kids.empty()) out.push_back(n);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<std::string> LeafWords(const Tree &tree) {
  std::vector<std::string> out;
  if (tree.size() == 0) return out;
  for (NodeId id : Leaves(tree)) out.push_back(tree.node(id).label);
  return out;
}

}  // namespace reqlint
