// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dqc/circuit.hpp"
#include "dqc/common.hpp"

namespace dqc {

// Seeded random circuit generation for test corpora. Sizes and depth stay
// capped so the exhaustive debate checks on the result fit their budgets.
struct RandomCircuitParams {
  int n = 2;
  int min_size = 2;
  int max_size = 10;
  int depth_cap = 4;
  int not_percent = 20;  // chance a gate is a NOT
};

Circuit random_circuit(Rng& rng, const RandomCircuitParams& params);

// Random decision tree over the given index space. Paths never repeat an
// index; `allowed` restricts the queried positions (e.g. transcript-only
// trees for the pairing-bound corpus).
DecisionTree random_decision_tree(Rng& rng, int space_size, int max_depth,
                                  const std::vector<int>& allowed, int leaf_percent = 25);

}  // namespace dqc
