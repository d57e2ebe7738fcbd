// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <string>

#include "dqc/boolfn.hpp"
#include "dqc/common.hpp"
#include "dqc/decision_tree.hpp"

namespace dqc {

enum class GateKind { And, Or, Not };

// Operand of a gate: an input x_i (1-based) or an earlier gate (0-based index
// into the gate list). Topological order is the list order; the parser rejects
// forward references so acyclicity holds by construction.
struct Operand {
  bool is_input;
  int index;

  bool operator==(const Operand&) const = default;
};

struct Gate {
  std::string id;
  GateKind kind;
  Operand a;
  Operand b;  // ignored for Not
};

// Fan-in-<=2 circuit over AND/OR/NOT with a single designated output gate.
// size counts every gate including NOT; depth is the longest input-to-output
// path measured in gates.
class Circuit {
 public:
  Circuit(int n_inputs, std::vector<Gate> gates, int output);

  // Netlist text format (one statement per line, '#' comments):
  //   inputs <n>                      first non-comment line, exactly once
  //   gate <id> AND|OR <ref> <ref>
  //   gate <id> NOT <ref>
  //   output <id>                     last non-comment line, exactly once
  // <ref> is x<i> (1-based) or a previously declared gate id.
  static Circuit parse_netlist(const std::string& text);
  std::string to_netlist() const;

  int n_inputs() const { return n_inputs_; }
  int size() const { return static_cast<int>(gates_.size()); }
  int depth() const;
  int output() const { return output_; }
  const std::vector<Gate>& gates() const { return gates_; }
  int not_count() const;

  uint8_t eval(std::span<const uint8_t> x) const;
  // Value of every gate in list order (the cross-examination primitive).
  Bits eval_gates(std::span<const uint8_t> x) const;

  // Explicit truth table; requires n_inputs <= 20.
  BoolFn truth_table(std::string label) const;

 private:
  int n_inputs_;
  std::vector<Gate> gates_;
  int output_;
};

// Leveled alternating form: AND at the root, kinds strictly alternating along
// every root-to-leaf path, negations only at the leaves.
class NormalizedCircuit {
 public:
  struct Literal {
    int var;  // 1-based
    bool negated;
  };
  // Children encode nodes (>= 0) or literals (< 0, literal index ~c).
  struct Node {
    GateKind kind;  // And or Or only
    int child[2];
  };

  static constexpr int literal_ref(int lit_index) { return ~lit_index; }
  static constexpr bool is_literal(int child) { return child < 0; }
  static constexpr int literal_index(int child) { return ~child; }

  static NormalizedCircuit normalize(const Circuit& c);

  int n_inputs() const { return n_inputs_; }
  int root() const { return root_; }
  int depth() const { return depth_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int i) const { return nodes_[i]; }
  const Literal& literal(int i) const { return literals_[i]; }

  uint8_t eval(std::span<const uint8_t> x) const { return eval_child(root_, x); }
  uint8_t eval_child(int child, std::span<const uint8_t> x) const;

 private:
  NormalizedCircuit() = default;

  int n_inputs_ = 0;
  std::vector<Node> nodes_;
  std::vector<Literal> literals_;
  int root_ = 0;  // always a node (a bare literal gets wrapped)
  int depth_ = 0;
};

// Incremental construction with constant folding and structural hashing.
// Wires are either constants or references into the gate list being built;
// constants are only materialized if they survive to the output.
class CircuitBuilder {
 public:
  struct Wire {
    int tag;  // kConst0, kConst1, input (1..n), or gate (encoded)
    bool operator==(const Wire&) const = default;
    auto operator<=>(const Wire&) const = default;
  };

  explicit CircuitBuilder(int n_inputs);

  Wire input(int i) const;  // 1-based
  Wire constant(uint8_t bit) const;
  Wire and_(Wire a, Wire b);
  Wire or_(Wire a, Wire b);
  Wire not_(Wire a);
  Wire xor_(Wire a, Wire b);   // (a|b) & !(a&b), 4 gates before sharing
  Wire xnor_(Wire a, Wire b);
  Wire mux(Wire sel, Wire if0, Wire if1);

  // Instantiate an existing circuit on the given wires (one per input).
  Wire inline_circuit(const Circuit& c, std::span<const Wire> inputs);

  // Finalize. Constants and bare inputs are materialized as a single gate so
  // the result always has a designated output gate.
  Circuit finish(Wire output);

  int gate_count() const { return static_cast<int>(gates_.size()); }

 private:
  static constexpr int kConst0 = -1;
  static constexpr int kConst1 = -2;

  int n_inputs_;
  std::vector<Gate> gates_;
  std::map<std::tuple<int, int, int>, Wire> cache_;  // (kind, a.tag, b.tag) -> wire

  bool is_const(Wire w, uint8_t bit) const;
  Operand operand(Wire w) const;
  Wire emit(GateKind kind, Wire a, Wire b);
};

// Circuit computing the same function as the tree over space_size inputs.
// Shared identical subtrees become shared wires; mux constant folding keeps
// honest trees small. Size stays <= 3*(2^q - 1) + NOT overhead.
Circuit decision_tree_to_circuit(const DecisionTree& t);

// Majority of t bits (t odd) via a full-adder popcount tree and a constant
// threshold comparator; size linear in t.
Circuit majority_circuit(int t);

// Balanced XOR tree over 4-gate gadgets (a^b = (a|b) & !(a&b)).
Circuit parity_circuit(int n);

// Shannon-expansion circuit for an arbitrary truth table (test corpora and
// the CLI synth command). Subtable sharing keeps n<=4 instances small.
Circuit circuit_for_function(const BoolFn& f);

}  // namespace dqc
