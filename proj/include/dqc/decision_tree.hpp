// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>

#include "dqc/common.hpp"

namespace dqc {

// Deterministic q-query decision tree over a declared index space of
// `space_size` bit positions (0-based indices).
class DecisionTree {
 public:
  // Child encoding: >= 0 is a node id, kLeaf0/kLeaf1 are verdict leaves.
  static constexpr int kLeaf0 = -1;
  static constexpr int kLeaf1 = -2;

  struct Node {
    int index;  // queried position
    int c0;
    int c1;
  };

  DecisionTree(int space_size, std::vector<Node> nodes, int root);

  static DecisionTree constant(int space_size, uint8_t bit);

  int space_size() const { return space_size_; }
  int root() const { return root_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  bool is_constant() const { return root_ < 0; }

  // Longest root-to-leaf path (query count). 0 for a constant tree.
  int depth() const { return depth_; }

  uint8_t eval(std::span<const uint8_t> bits) const;

  // The indices probed on one run, in order.
  std::vector<int> probes_on(std::span<const uint8_t> bits) const;

  // Every index appearing anywhere in the tree.
  std::set<int> all_indices() const;

  // Record format, one per line:
  //   node <id> <index> <c0> <c1>
  //   leaf <id> <bit>
  // Children reference previously unseen or seen ids; the root is the id of
  // the first record. Leading "tree"-level syntax lives in the rv file format.
  static DecisionTree parse(const std::string& text, int space_size);
  std::string serialize() const;

 private:
  int space_size_;
  std::vector<Node> nodes_;
  int root_;
  int depth_;

  int compute_depth(int child) const;
};

}  // namespace dqc
