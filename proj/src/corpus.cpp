// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#include "dqc/corpus.hpp"

#include <algorithm>

namespace dqc {

Circuit random_circuit(Rng& rng, const RandomCircuitParams& p) {
  if (p.n < 1 || p.min_size < 1 || p.max_size < p.min_size || p.depth_cap < 1)
    throw Error(ErrorKind::InputShape, "bad random circuit parameters");
  const int target = p.min_size + static_cast<int>(rng.below(p.max_size - p.min_size + 1));
  std::vector<Gate> gates;
  std::vector<int> depth;  // per gate
  auto pick_operand = [&](int max_depth) -> Operand {
    std::vector<Operand> pool;
    for (int i = 1; i <= p.n; ++i) pool.push_back(Operand{true, i});
    for (size_t g = 0; g < gates.size(); ++g)
      if (depth[g] <= max_depth) pool.push_back(Operand{false, static_cast<int>(g)});
    return pool[rng.below(pool.size())];
  };
  for (int g = 0; g < target; ++g) {
    bool make_not = static_cast<int>(rng.below(100)) < p.not_percent;
    GateKind kind = make_not ? GateKind::Not : (rng.bit() ? GateKind::And : GateKind::Or);
    Operand a = pick_operand(p.depth_cap - 1);
    Operand b = kind == GateKind::Not ? a : pick_operand(p.depth_cap - 1);
    auto d_of = [&](const Operand& op) { return op.is_input ? 0 : depth[op.index]; };
    int d = 1 + std::max(d_of(a), kind == GateKind::Not ? 0 : d_of(b));
    gates.push_back(Gate{"g" + std::to_string(g + 1), kind, a, b});
    depth.push_back(d);
  }
  return Circuit(p.n, std::move(gates), target - 1);
}

DecisionTree random_decision_tree(Rng& rng, int space_size, int max_depth,
                                  const std::vector<int>& allowed, int leaf_percent) {
  if (allowed.empty()) throw Error(ErrorKind::InputShape, "random tree needs allowed indices");
  std::vector<DecisionTree::Node> nodes;
  std::vector<int> path;
  auto rec = [&](auto&& self, int depth) -> int {
    bool must_leaf = depth >= max_depth || path.size() >= allowed.size();
    if (must_leaf || static_cast<int>(rng.below(100)) < leaf_percent)
      return rng.bit() ? DecisionTree::kLeaf1 : DecisionTree::kLeaf0;
    int index;
    do {
      index = allowed[rng.below(allowed.size())];
    } while (std::find(path.begin(), path.end(), index) != path.end());
    path.push_back(index);
    int id = static_cast<int>(nodes.size());
    nodes.push_back(DecisionTree::Node{index, 0, 0});
    int c0 = self(self, depth + 1);
    int c1 = self(self, depth + 1);
    nodes[id].c0 = c0;
    nodes[id].c1 = c1;
    path.pop_back();
    return id;
  };
  int root = rec(rec, 0);
  return DecisionTree(space_size, std::move(nodes), root);
}

}  // namespace dqc
