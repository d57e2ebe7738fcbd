#include <doctest.h>

#include <functional>
#include <sstream>

#include "dqc/circuit.hpp"
#include "dqc/corpus.hpp"

using namespace dqc;

namespace {

// Spec's 5-gate XOR gadget: a^b = (a & !b) | (!a & b). Used to hand-write a
// parity-4 netlist independent of the builder.
const char* kParity4Netlist = R"(# parity over 4 inputs, three 5-gate xor gadgets
inputs 4
gate n1 NOT x2
gate n2 NOT x1
gate a1 AND x1 n1
gate a2 AND n2 x2
gate s1 OR a1 a2
gate n3 NOT x4
gate n4 NOT x3
gate a3 AND x3 n3
gate a4 AND n4 x4
gate s2 OR a3 a4
gate n5 NOT s2
gate n6 NOT s1
gate a5 AND s1 n5
gate a6 AND n6 s2
gate out OR a5 a6
output out
)";

uint8_t fold_parity(const Bits& x) {
  uint8_t acc = 0;
  for (uint8_t b : x) acc ^= b;
  return acc;
}

void check_same_function(const Circuit& c, const NormalizedCircuit& nc) {
  REQUIRE(c.n_inputs() == nc.n_inputs());
  for (uint32_t v = 0; v < pow2(c.n_inputs()); ++v) {
    Bits x = bits_of_index(v, c.n_inputs());
    CHECK(c.eval(x) == nc.eval(x));
  }
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected an Error");
}

}  // namespace

TEST_SUITE("circuit") {

TEST_CASE("netlist parsing and metrics") {
  Circuit and2 = Circuit::parse_netlist("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  CHECK(and2.size() == 1);
  CHECK(and2.depth() == 1);
  CHECK(and2.eval(bits_from_string("11")) == 1);
  CHECK(and2.eval(bits_from_string("01")) == 0);

  Circuit n1 = Circuit::parse_netlist("inputs 1\ngate g1 NOT x1\noutput g1\n");
  CHECK(n1.size() == 1);
  CHECK(n1.depth() == 1);
  CHECK(n1.eval(bits_from_string("1")) == 0);
}

TEST_CASE("netlist errors carry line numbers") {
  auto parse = [](const char* text) { return [text] { Circuit::parse_netlist(text); }; };
  CHECK(kind_of(parse("inputs 2\ngate g1 AND x1 g2\ngate g2 NOT x1\noutput g2\n")) ==
        ErrorKind::Parse);  // forward reference
  try {
    Circuit::parse_netlist("inputs 2\ngate g1 AND x1 g2\ngate g2 NOT x1\noutput g2\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("forward reference") != std::string::npos);
  }
  CHECK(kind_of(parse("inputs 2\ngate g1 AND x1 zz\noutput g1\n")) == ErrorKind::Parse);
  CHECK(kind_of(parse("inputs 2\ngate g1 AND x1\noutput g1\n")) == ErrorKind::Parse);  // arity
  CHECK(kind_of(parse("inputs 2\ngate g1 NOT x1 x2\noutput g1\n")) == ErrorKind::Parse);
  CHECK(kind_of(parse("inputs 2\ngate g1 AND x1 x2\n")) == ErrorKind::Parse);  // no output
  CHECK(kind_of(parse("inputs 2\ngate g1 AND x1 x3\noutput g1\n")) == ErrorKind::Parse);
  CHECK(kind_of(parse("inputs 2\ngate g1 AND x1 x2\ngate g1 OR x1 x2\noutput g1\n")) ==
        ErrorKind::Parse);  // duplicate id
  CHECK(kind_of(parse("inputs 2\noutput g1\n")) == ErrorKind::Parse);
}

TEST_CASE("netlist round trip") {
  Circuit c = Circuit::parse_netlist(kParity4Netlist);
  Circuit back = Circuit::parse_netlist(c.to_netlist());
  CHECK(back.size() == c.size());
  for (uint32_t v = 0; v < 16; ++v) {
    Bits x = bits_of_index(v, 4);
    CHECK(back.eval(x) == c.eval(x));
  }
}

TEST_CASE("hand-written parity-4 circuit evaluates by XOR fold") {
  Circuit c = Circuit::parse_netlist(kParity4Netlist);
  CHECK(c.size() == 15);
  Bits probe = bits_from_string("1110");
  CHECK(c.eval(probe) == 1);  // 1^1^1^0 folded by hand
  for (uint32_t v = 0; v < 16; ++v) {
    Bits x = bits_of_index(v, 4);
    CHECK(c.eval(x) == fold_parity(x));
  }
  // Full per-gate vector is exposed and consistent with the output.
  Bits vals = c.eval_gates(probe);
  CHECK(vals[c.output()] == 1);
}

TEST_CASE("normalize: frozen examples") {
  Circuit and2 = Circuit::parse_netlist("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  NormalizedCircuit n = NormalizedCircuit::normalize(and2);
  CHECK(n.depth() == 1);
  check_same_function(and2, n);

  Circuit or2 = Circuit::parse_netlist("inputs 2\ngate g1 OR x1 x2\noutput g1\n");
  n = NormalizedCircuit::normalize(or2);
  CHECK(n.depth() == 2);  // root wrap
  CHECK(n.node(n.root()).kind == GateKind::And);
  check_same_function(or2, n);

  Circuit nand2 = Circuit::parse_netlist("inputs 2\ngate g1 AND x1 x2\ngate g2 NOT g1\noutput g2\n");
  n = NormalizedCircuit::normalize(nand2);
  check_same_function(nand2, n);
  CHECK(n.node(n.root()).kind == GateKind::And);
}

TEST_CASE("normalize preserves the function on random circuits") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    RandomCircuitParams p;
    p.n = 2 + static_cast<int>(rng.below(3));
    p.min_size = 1;
    p.max_size = 14;
    p.depth_cap = 5;
    Circuit c = random_circuit(rng, p);
    NormalizedCircuit n = NormalizedCircuit::normalize(c);
    check_same_function(c, n);
    CHECK(n.depth() <= 2 * c.depth() + 1);
    // Strict alternation from an AND root.
    CHECK(n.node(n.root()).kind == GateKind::And);
  }
  // One wider instance: parity over 8 inputs, exhaustive equivalence.
  Circuit p8 = parity_circuit(8);
  NormalizedCircuit n8 = NormalizedCircuit::normalize(p8);
  check_same_function(p8, n8);
}

TEST_CASE("metrics are recomputed from the gate list") {
  Circuit par = parity_circuit(4);
  Circuit reparsed = Circuit::parse_netlist(par.to_netlist());
  CHECK(par.size() == reparsed.size());
  int counted = 0;
  std::istringstream in(par.to_netlist());
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("gate ", 0) == 0) ++counted;
  CHECK(par.size() == counted);
  CHECK(parity_circuit(3).size() == 8);  // two 4-gate gadgets
}

TEST_CASE("decision_tree_to_circuit: collapsing muxes") {
  // Query index 0; leaves 0/1: the multiplexer collapses to the wire itself.
  DecisionTree ident(3, {{0, DecisionTree::kLeaf0, DecisionTree::kLeaf1}}, 0);
  Circuit c = decision_tree_to_circuit(ident);
  for (uint32_t v = 0; v < 8; ++v) {
    Bits x = bits_of_index(v, 3);
    CHECK(c.eval(x) == x[0]);
  }
  CHECK(c.size() <= 1);

  DecisionTree neg(3, {{0, DecisionTree::kLeaf1, DecisionTree::kLeaf0}}, 0);
  Circuit cn = decision_tree_to_circuit(neg);
  CHECK(cn.size() == 1);
  CHECK(cn.gates()[0].kind == GateKind::Not);
  for (uint32_t v = 0; v < 8; ++v) {
    Bits x = bits_of_index(v, 3);
    CHECK(cn.eval(x) == (x[0] ^ 1));
  }
}

TEST_CASE("decision_tree_to_circuit: depth-2 AND tree, exhaustive") {
  // Query 0; on 1 query 1; leaves give AND of the two positions.
  DecisionTree t(2,
                 {
                     {0, DecisionTree::kLeaf0, 1},
                     {1, DecisionTree::kLeaf0, DecisionTree::kLeaf1},
                 },
                 0);
  Circuit c = decision_tree_to_circuit(t);
  for (uint32_t v = 0; v < 4; ++v) {
    Bits x = bits_of_index(v, 2);
    CHECK(c.eval(x) == (x[0] & x[1]));
  }
}

TEST_CASE("decision_tree_to_circuit: random trees, size bound and equivalence") {
  Rng rng(23);
  std::vector<int> allowed{0, 1, 2, 3, 4, 5, 6, 7};
  for (int trial = 0; trial < 40; ++trial) {
    DecisionTree t = random_decision_tree(rng, 8, 4, allowed);
    Circuit c = decision_tree_to_circuit(t);
    int q = t.depth();
    CHECK(c.size() <= 3 * (static_cast<int>(pow2(q)) - 1) + c.not_count() + 1);
    for (uint32_t v = 0; v < 256; ++v) {
      Bits x = bits_of_index(v, 8);
      CHECK(c.eval(x) == t.eval(x));
    }
  }
}

TEST_CASE("majority circuits") {
  Circuit m1 = majority_circuit(1);
  CHECK(m1.size() <= 1);
  CHECK(m1.eval(bits_from_string("1")) == 1);
  CHECK(m1.eval(bits_from_string("0")) == 0);

  Circuit m3 = majority_circuit(3);
  BoolFn maj3 = BoolFn::builtin("majority", 3);
  for (uint32_t v = 0; v < 8; ++v) {
    Bits x = bits_of_index(v, 3);
    CHECK(m3.eval(x) == maj3.eval(x));
  }

  // t = 9 against the popcount oracle: 200 seeded inputs plus the corners.
  Circuit m9 = majority_circuit(9);
  Rng rng(7);
  auto check_input = [&](const Bits& x) {
    int ones = 0;
    for (uint8_t b : x) ones += b;
    CHECK(m9.eval(x) == (ones >= 5 ? 1 : 0));
  };
  for (int trial = 0; trial < 200; ++trial) {
    Bits x(9);
    for (auto& b : x) b = rng.bit();
    check_input(x);
  }
  check_input(Bits(9, 0));
  check_input(Bits(9, 1));

  for (int t : {3, 5, 9, 15}) {
    Circuit m = majority_circuit(t);
    CHECK(m.size() <= 20 * t);
  }
  CHECK_THROWS_AS(majority_circuit(4), Error);
  CHECK_THROWS_AS(majority_circuit(0), Error);
}

TEST_CASE("circuit_for_function covers every 2-variable table") {
  for (uint32_t mask = 0; mask < 16; ++mask) {
    Bits table(4);
    for (int v = 0; v < 4; ++v) table[v] = (mask >> v) & 1;
    BoolFn f(2, table);
    Circuit c = circuit_for_function(f);
    CHECK(c.truth_table("t").table() == table);
  }
  BoolFn maj3 = BoolFn::builtin("majority", 3);
  CHECK(circuit_for_function(maj3).truth_table("t") == maj3);
}

TEST_CASE("builder inline and truth_table") {
  CircuitBuilder b(3);
  std::vector<CircuitBuilder::Wire> ws{b.input(1), b.input(2), b.input(3)};
  CircuitBuilder::Wire w = b.inline_circuit(parity_circuit(3), ws);
  Circuit c = b.finish(b.not_(w));
  BoolFn f = c.truth_table("notparity");
  for (uint32_t v = 0; v < 8; ++v)
    CHECK(f.eval_index(v) == (fold_parity(bits_of_index(v, 3)) ^ 1));
}

TEST_CASE("cross-module guard: output must be a gate") {
  // finish() on a bare input materializes exactly one identity gate.
  CircuitBuilder b(2);
  Circuit c = b.finish(b.input(2));
  CHECK(c.size() == 1);
  CHECK(c.eval(bits_from_string("01")) == 1);
  CHECK(c.eval(bits_from_string("10")) == 0);

  CircuitBuilder b2(2);
  Circuit czero = b2.finish(b2.constant(0));
  for (uint32_t v = 0; v < 4; ++v) CHECK(czero.eval(bits_of_index(v, 2)) == 0);
}

}  // TEST_SUITE
