// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#include "dqc/decision_tree.hpp"

#include <map>
#include <sstream>

namespace dqc {

DecisionTree::DecisionTree(int space_size, std::vector<Node> nodes, int root)
    : space_size_(space_size), nodes_(std::move(nodes)), root_(root) {
  if (space_size_ < 1) throw Error(ErrorKind::InputShape, "decision tree index space is empty");
  for (const Node& nd : nodes_) {
    if (nd.index < 0 || nd.index >= space_size_)
      throw Error(ErrorKind::IndexRange, "decision tree queries index " + std::to_string(nd.index) +
                                             " outside space of size " + std::to_string(space_size_));
    for (int c : {nd.c0, nd.c1})
      if (c >= static_cast<int>(nodes_.size()) || c < kLeaf1)
        throw Error(ErrorKind::Parse, "decision tree child reference out of range");
  }
  if (root_ >= static_cast<int>(nodes_.size()) || root_ < kLeaf1)
    throw Error(ErrorKind::Parse, "decision tree root out of range");
  // Reject cycles / measure depth in one pass.
  depth_ = compute_depth(root_);
}

int DecisionTree::compute_depth(int child) const {
  if (child < 0) return 0;
  std::vector<int> depth(nodes_.size(), -1);
  std::vector<int> state(nodes_.size(), 0);
  // Iterative DFS; state 1 = on stack (cycle detect).
  std::vector<int> stack{child};
  while (!stack.empty()) {
    int v = stack.back();
    if (state[v] == 0) {
      state[v] = 1;
      for (int c : {nodes_[v].c0, nodes_[v].c1}) {
        if (c < 0) continue;
        if (state[c] == 1) throw Error(ErrorKind::Parse, "decision tree contains a cycle");
        if (state[c] == 0) stack.push_back(c);
      }
    } else {
      stack.pop_back();
      if (state[v] == 2) continue;
      state[v] = 2;
      int d0 = nodes_[v].c0 < 0 ? 0 : depth[nodes_[v].c0];
      int d1 = nodes_[v].c1 < 0 ? 0 : depth[nodes_[v].c1];
      depth[v] = 1 + std::max(d0, d1);
    }
  }
  return depth[child];
}

DecisionTree DecisionTree::constant(int space_size, uint8_t bit) {
  return DecisionTree(space_size, {}, bit ? kLeaf1 : kLeaf0);
}

uint8_t DecisionTree::eval(std::span<const uint8_t> bits) const {
  if (static_cast<int>(bits.size()) != space_size_)
    throw Error(ErrorKind::InputShape, "decision tree input length mismatch");
  int cur = root_;
  while (cur >= 0) {
    const Node& nd = nodes_[cur];
    cur = bits[nd.index] ? nd.c1 : nd.c0;
  }
  return cur == kLeaf1 ? 1 : 0;
}

std::vector<int> DecisionTree::probes_on(std::span<const uint8_t> bits) const {
  if (static_cast<int>(bits.size()) != space_size_)
    throw Error(ErrorKind::InputShape, "decision tree input length mismatch");
  std::vector<int> probes;
  int cur = root_;
  while (cur >= 0) {
    const Node& nd = nodes_[cur];
    probes.push_back(nd.index);
    cur = bits[nd.index] ? nd.c1 : nd.c0;
  }
  return probes;
}

std::set<int> DecisionTree::all_indices() const {
  std::set<int> out;
  for (const Node& nd : nodes_) out.insert(nd.index);
  return out;
}

DecisionTree DecisionTree::parse(const std::string& text, int space_size) {
  std::istringstream in(text);
  std::string line;
  struct Raw {
    bool leaf = false;
    int index = 0;
    uint8_t bit = 0;
    std::string c0, c1;
  };
  std::map<std::string, Raw> raw;
  std::vector<std::string> order;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind[0] == '#') continue;
    std::string id;
    Raw r;
    if (kind == "node") {
      if (!(ls >> id >> r.index >> r.c0 >> r.c1))
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": node <id> <index> <c0> <c1>");
    } else if (kind == "leaf") {
      int bit;
      if (!(ls >> id >> bit) || (bit != 0 && bit != 1))
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": leaf <id> <bit>");
      r.leaf = true;
      r.bit = static_cast<uint8_t>(bit);
    } else {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": unknown record '" + kind + "'");
    }
    if (raw.count(id))
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": duplicate id '" + id + "'");
    raw[id] = r;
    order.push_back(id);
  }
  if (order.empty()) throw Error(ErrorKind::Parse, "decision tree file has no records");

  // Assign node ids in record order (leaves get encodings).
  std::map<std::string, int> encoding;
  std::vector<Node> nodes;
  for (const std::string& id : order) {
    const Raw& r = raw[id];
    if (r.leaf) {
      encoding[id] = r.bit ? kLeaf1 : kLeaf0;
    } else {
      encoding[id] = static_cast<int>(nodes.size());
      nodes.push_back(Node{r.index, 0, 0});
    }
  }
  for (const std::string& id : order) {
    const Raw& r = raw[id];
    if (r.leaf) continue;
    auto l0 = encoding.find(r.c0);
    auto l1 = encoding.find(r.c1);
    if (l0 == encoding.end() || l1 == encoding.end())
      throw Error(ErrorKind::Parse, "decision tree node '" + id + "' references unknown child");
    nodes[encoding[id]].c0 = l0->second;
    nodes[encoding[id]].c1 = l1->second;
  }
  int root = encoding[order.front()];
  return DecisionTree(space_size, std::move(nodes), root);
}

std::string DecisionTree::serialize() const {
  std::ostringstream out;
  auto child_name = [&](int c) -> std::string {
    if (c == kLeaf0) return "L0";
    if (c == kLeaf1) return "L1";
    return "n" + std::to_string(c);
  };
  if (root_ < 0) {
    out << "leaf " << child_name(root_) << " " << (root_ == kLeaf1 ? 1 : 0) << "\n";
    return out.str();
  }
  // Emit the root first (parse() takes the first record as the root).
  std::vector<int> order;
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v < 0 || seen[v]) continue;
    seen[v] = true;
    order.push_back(v);
    stack.push_back(nodes_[v].c1);
    stack.push_back(nodes_[v].c0);
  }
  bool used_l0 = false, used_l1 = false;
  for (int v : order) {
    for (int c : {nodes_[v].c0, nodes_[v].c1}) {
      used_l0 |= (c == kLeaf0);
      used_l1 |= (c == kLeaf1);
    }
  }
  for (int v : order)
    out << "node n" << v << " " << nodes_[v].index << " " << child_name(nodes_[v].c0) << " "
        << child_name(nodes_[v].c1) << "\n";
  if (used_l0) out << "leaf L0 0\n";
  if (used_l1) out << "leaf L1 1\n";
  return out.str();
}

}  // namespace dqc
