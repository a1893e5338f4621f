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

// Bracketed (Penn Treebank style) constituency trees.
//
//   node := "(" LABEL node+ ")" | WORD
//
// A Tree owns its nodes in a flat vector indexed by NodeId; node 0 is the
// root and ids follow pre-order.

#ifndef REQLINT_PTB_TREE_H_
#define REQLINT_PTB_TREE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/model.h"

namespace reqlint {

using NodeId = std::size_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

struct TreeNode {
  std::string label;  // constituent tag, or the word for leaves
  NodeId parent = kNoNode;
  std::vector<NodeId> children;
  std::size_t child_index = 0;  // position among parent's children
  TokenSpan span;               // leaf span

  bool IsLeaf() const { return children.empty(); }
};

class Tree {
 public:
  // Nested builder used by tests and generators.
  struct Spec {
    std::string label;
    std::vector<Spec> children;
  };
  static Spec Leaf(std::string word) { return {std::move(word), {}}; }
  static Spec Make(std::string label, std::vector<Spec> children) {
    return {std::move(label), std::move(children)};
  }

  Tree() = default;
  explicit Tree(const Spec &spec);

  NodeId root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const TreeNode &node(NodeId id) const { return nodes_[id]; }
  const std::vector<TreeNode> &nodes() const { return nodes_; }
  std::size_t leaf_count() const {
    return nodes_.empty() ? 0 : nodes_[0].span.end;
  }

  // Preterminal: an internal node whose only child is a leaf.
  bool IsPreterminal(NodeId id) const;

  // Structural equality of labels and shape.
  friend bool operator==(const Tree &a, const Tree &b);

 private:
  friend Tree ParseTree(std::string_view text);
  NodeId Add(const Spec &spec, NodeId parent, std::size_t child_index,
             std::size_t *next_leaf);

  std::vector<TreeNode> nodes_;
};

// Throws ParseError on unbalanced parentheses, empty constituents, empty
// labels or trailing garbage.
Tree ParseTree(std::string_view text);

// Canonical single-space form.
std::string RenderTree(const Tree &tree, NodeId id);
inline std::string RenderTree(const Tree &tree) {
  return RenderTree(tree, tree.root());
}

// Leaf node ids under `id`, left to right.
std::vector<NodeId> Leaves(const Tree &tree, NodeId id);
inline std::vector<NodeId> Leaves(const Tree &tree) {
  return Leaves(tree, tree.root());
}

// Leaf words of the whole tree.
std::vector<std::string> LeafWords(const Tree &tree);

}  // namespace reqlint

#endif  // REQLINT_PTB_TREE_H_
