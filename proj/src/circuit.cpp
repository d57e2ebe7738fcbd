// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#include "dqc/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace dqc {

namespace {

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::And: return "AND";
    case GateKind::Or: return "OR";
    case GateKind::Not: return "NOT";
  }
  return "?";
}

bool is_input_ref(const std::string& tok) {
  if (tok.size() < 2 || tok[0] != 'x') return false;
  for (size_t i = 1; i < tok.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(tok[i]))) return false;
  return true;
}

}  // namespace

Circuit::Circuit(int n_inputs, std::vector<Gate> gates, int output)
    : n_inputs_(n_inputs), gates_(std::move(gates)), output_(output) {
  if (n_inputs_ < 1) throw Error(ErrorKind::InputShape, "circuit needs at least one input");
  if (gates_.empty()) throw Error(ErrorKind::InputShape, "circuit needs at least one gate");
  for (size_t g = 0; g < gates_.size(); ++g) {
    const Gate& gate = gates_[g];
    int arity = gate.kind == GateKind::Not ? 1 : 2;
    for (int s = 0; s < arity; ++s) {
      const Operand& op = s == 0 ? gate.a : gate.b;
      if (op.is_input) {
        if (op.index < 1 || op.index > n_inputs_)
          throw Error(ErrorKind::IndexRange, "gate '" + gate.id + "' references input x" +
                                                 std::to_string(op.index) + " outside 1.." +
                                                 std::to_string(n_inputs_));
      } else if (op.index < 0 || op.index >= static_cast<int>(g)) {
        throw Error(ErrorKind::IndexRange,
                    "gate '" + gate.id + "' references a non-earlier gate");
      }
    }
  }
  if (output_ < 0 || output_ >= static_cast<int>(gates_.size()))
    throw Error(ErrorKind::IndexRange, "output gate index out of range");
}

Circuit Circuit::parse_netlist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorKind::Parse, "netlist line " + std::to_string(lineno) + ": " + msg);
  };

  // Pre-scan gate declarations so forward references are reported as such.
  std::map<std::string, int> declared_line;
  {
    std::istringstream scan(text);
    std::string sline;
    int sno = 0;
    while (std::getline(scan, sline)) {
      ++sno;
      std::istringstream ls(sline);
      std::string kw, id;
      if ((ls >> kw) && kw == "gate" && (ls >> id)) declared_line.emplace(id, sno);
    }
  }

  int n_inputs = -1;
  std::vector<Gate> gates;
  std::map<std::string, int> gate_index;
  int output = -1;
  bool saw_output = false;

  auto resolve = [&](const std::string& tok) -> Operand {
    if (is_input_ref(tok)) {
      int idx = std::stoi(tok.substr(1));
      if (idx < 1 || idx > n_inputs) throw fail("input " + tok + " out of range");
      return Operand{true, idx};
    }
    auto it = gate_index.find(tok);
    if (it != gate_index.end()) return Operand{false, it->second};
    auto decl = declared_line.find(tok);
    if (decl != declared_line.end())
      throw fail("forward reference to gate '" + tok + "' declared on line " +
                 std::to_string(decl->second));
    throw fail("unknown operand '" + tok + "'");
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (saw_output) throw fail("statements after the output line");
    if (kw == "inputs") {
      if (n_inputs >= 0) throw fail("duplicate inputs line");
      if (!gates.empty()) throw fail("inputs must come before gates");
      if (!(ls >> n_inputs) || n_inputs < 1) throw fail("inputs needs a positive count");
    } else if (kw == "gate") {
      if (n_inputs < 0) throw fail("inputs line must come first");
      std::string id, kind_tok;
      if (!(ls >> id >> kind_tok)) throw fail("gate <id> AND|OR|NOT <ref> [<ref>]");
      if (is_input_ref(id)) throw fail("gate id '" + id + "' conflicts with input syntax");
      if (gate_index.count(id)) throw fail("duplicate gate id '" + id + "'");
      GateKind kind;
      int arity;
      if (kind_tok == "AND") {
        kind = GateKind::And;
        arity = 2;
      } else if (kind_tok == "OR") {
        kind = GateKind::Or;
        arity = 2;
      } else if (kind_tok == "NOT") {
        kind = GateKind::Not;
        arity = 1;
      } else {
        throw fail("unknown gate kind '" + kind_tok + "'");
      }
      std::string ra, rb, extra;
      if (!(ls >> ra)) throw fail("gate '" + id + "' missing operand");
      Operand a = resolve(ra);
      Operand b = a;
      if (arity == 2) {
        if (!(ls >> rb)) throw fail(std::string(kind_name(kind)) + " gate '" + id +
                                    "' needs two operands");
        b = resolve(rb);
      }
      if (ls >> extra) throw fail("gate '" + id + "' has too many operands");
      gate_index.emplace(id, static_cast<int>(gates.size()));
      gates.push_back(Gate{id, kind, a, b});
    } else if (kw == "output") {
      std::string id;
      if (!(ls >> id)) throw fail("output needs a gate id");
      auto it = gate_index.find(id);
      if (it == gate_index.end()) throw fail("output references unknown gate '" + id + "'");
      output = it->second;
      saw_output = true;
    } else {
      throw fail("unknown statement '" + kw + "'");
    }
  }
  if (n_inputs < 0) throw Error(ErrorKind::Parse, "netlist: missing inputs line");
  if (!saw_output) throw Error(ErrorKind::Parse, "netlist: missing output line");
  return Circuit(n_inputs, std::move(gates), output);
}

std::string Circuit::to_netlist() const {
  std::ostringstream out;
  out << "inputs " << n_inputs_ << "\n";
  auto ref = [&](const Operand& op) {
    return op.is_input ? "x" + std::to_string(op.index) : gates_[op.index].id;
  };
  for (const Gate& g : gates_) {
    out << "gate " << g.id << " " << kind_name(g.kind) << " " << ref(g.a);
    if (g.kind != GateKind::Not) out << " " << ref(g.b);
    out << "\n";
  }
  out << "output " << gates_[output_].id << "\n";
  return out.str();
}

int Circuit::depth() const {
  std::vector<int> d(gates_.size(), 0);
  for (size_t g = 0; g < gates_.size(); ++g) {
    auto operand_depth = [&](const Operand& op) { return op.is_input ? 0 : d[op.index]; };
    int dd = operand_depth(gates_[g].a);
    if (gates_[g].kind != GateKind::Not) dd = std::max(dd, operand_depth(gates_[g].b));
    d[g] = 1 + dd;
  }
  return d[output_];
}

int Circuit::not_count() const {
  int c = 0;
  for (const Gate& g : gates_)
    if (g.kind == GateKind::Not) ++c;
  return c;
}

Bits Circuit::eval_gates(std::span<const uint8_t> x) const {
  if (static_cast<int>(x.size()) != n_inputs_)
    throw Error(ErrorKind::InputShape, "circuit expects " + std::to_string(n_inputs_) +
                                           " input bits, got " + std::to_string(x.size()));
  Bits vals(gates_.size(), 0);
  for (size_t g = 0; g < gates_.size(); ++g) {
    auto v = [&](const Operand& op) { return op.is_input ? x[op.index - 1] : vals[op.index]; };
    switch (gates_[g].kind) {
      case GateKind::And: vals[g] = v(gates_[g].a) & v(gates_[g].b); break;
      case GateKind::Or: vals[g] = v(gates_[g].a) | v(gates_[g].b); break;
      case GateKind::Not: vals[g] = v(gates_[g].a) ^ 1; break;
    }
  }
  return vals;
}

uint8_t Circuit::eval(std::span<const uint8_t> x) const { return eval_gates(x)[output_]; }

BoolFn Circuit::truth_table(std::string label) const {
  if (n_inputs_ > 20)
    throw Error(ErrorKind::Budget, "truth table requires n <= 20, circuit has " +
                                       std::to_string(n_inputs_) + " inputs");
  Bits table(pow2(n_inputs_), 0);
  for (uint32_t v = 0; v < table.size(); ++v)
    table[v] = eval(bits_of_index(v, n_inputs_));
  return BoolFn(n_inputs_, std::move(table), std::move(label));
}

// ---------------------------------------------------------------------------
// NormalizedCircuit

uint8_t NormalizedCircuit::eval_child(int child, std::span<const uint8_t> x) const {
  if (static_cast<int>(x.size()) != n_inputs_)
    throw Error(ErrorKind::InputShape, "normalized circuit input length mismatch");
  std::vector<int8_t> cache(nodes_.size(), -1);
  // Post-order evaluation over the shared DAG.
  auto value = [&](auto&& self, int c) -> uint8_t {
    if (is_literal(c)) {
      const Literal& lit = literals_[literal_index(c)];
      return static_cast<uint8_t>(x[lit.var - 1] ^ (lit.negated ? 1 : 0));
    }
    if (cache[c] >= 0) return static_cast<uint8_t>(cache[c]);
    const Node& nd = nodes_[c];
    uint8_t a = self(self, nd.child[0]);
    uint8_t b = self(self, nd.child[1]);
    uint8_t v = nd.kind == GateKind::And ? (a & b) : (a | b);
    cache[c] = static_cast<int8_t>(v);
    return v;
  };
  return value(value, child);
}

NormalizedCircuit NormalizedCircuit::normalize(const Circuit& c) {
  NormalizedCircuit out;
  out.n_inputs_ = c.n_inputs();

  std::map<std::pair<int, bool>, int> literal_cache;  // (var, negated) -> literal index
  auto literal = [&](int var, bool neg) {
    auto key = std::make_pair(var, neg);
    auto it = literal_cache.find(key);
    if (it != literal_cache.end()) return literal_ref(it->second);
    int idx = static_cast<int>(out.literals_.size());
    out.literals_.push_back(Literal{var, neg});
    literal_cache.emplace(key, idx);
    return literal_ref(idx);
  };

  // Phase 1: dual-rail NOT elimination into an intermediate node pool.
  struct TmpNode {
    GateKind kind;
    int child[2];
  };
  std::vector<TmpNode> tmp;
  std::map<std::pair<int, bool>, int> dual_cache;  // (gate, positive) -> child encoding

  auto dual = [&](auto&& self, int gate, bool positive) -> int {
    auto key = std::make_pair(gate, positive);
    auto it = dual_cache.find(key);
    if (it != dual_cache.end()) return it->second;
    const Gate& g = c.gates()[gate];
    auto rail = [&](const Operand& op, bool pos) {
      return op.is_input ? literal(op.index, !pos) : self(self, op.index, pos);
    };
    int result;
    if (g.kind == GateKind::Not) {
      result = rail(g.a, !positive);
    } else {
      bool and_like = (g.kind == GateKind::And) == positive;  // De Morgan on the negative rail
      int a = rail(g.a, positive);
      int b = rail(g.b, positive);
      result = static_cast<int>(tmp.size());
      tmp.push_back(TmpNode{and_like ? GateKind::And : GateKind::Or, {a, b}});
    }
    dual_cache.emplace(key, result);
    return result;
  };
  int rail_root = dual(dual, c.output(), true);

  // Phase 2: pad to strict alternation with identity gates; root forced to AND.
  std::map<std::pair<int, GateKind>, int> pad_cache;
  auto pad = [&](auto&& self, int child, GateKind want) -> int {
    if (is_literal(child)) return child;
    auto key = std::make_pair(child, want);
    auto it = pad_cache.find(key);
    if (it != pad_cache.end()) return it->second;
    GateKind other = want == GateKind::And ? GateKind::Or : GateKind::And;
    int result;
    if (tmp[child].kind == want) {
      int a = self(self, tmp[child].child[0], other);
      int b = self(self, tmp[child].child[1], other);
      result = static_cast<int>(out.nodes_.size());
      out.nodes_.push_back(Node{want, {a, b}});
    } else {
      int m = self(self, child, other);
      result = static_cast<int>(out.nodes_.size());
      out.nodes_.push_back(Node{want, {m, m}});
    }
    pad_cache.emplace(key, result);
    return result;
  };

  int root;
  if (is_literal(rail_root)) {
    root = static_cast<int>(out.nodes_.size());
    out.nodes_.push_back(Node{GateKind::And, {rail_root, rail_root}});
  } else {
    root = pad(pad, rail_root, GateKind::And);
  }
  out.root_ = root;

  // Depth plus alternation check: node kind must be AND at even distance from
  // the root, OR at odd distance; with the recursion above this reduces to a
  // per-node depth computation.
  std::vector<int> depth(out.nodes_.size(), -1);
  auto compute_depth = [&](auto&& self, int child) -> int {
    if (is_literal(child)) return 0;
    if (depth[child] >= 0) return depth[child];
    const Node& nd = out.nodes_[child];
    for (int s = 0; s < 2; ++s) {
      int cc = nd.child[s];
      if (!is_literal(cc) && out.nodes_[cc].kind == nd.kind)
        throw Error(ErrorKind::Internal, "normalization produced non-alternating levels");
    }
    int d = 1 + std::max(self(self, nd.child[0]), self(self, nd.child[1]));
    depth[child] = d;
    return d;
  };
  out.depth_ = compute_depth(compute_depth, root);
  if (out.depth_ > 2 * c.depth() + 1)
    throw Error(ErrorKind::Internal, "normalized depth exceeds 2*depth+1");
  return out;
}

// ---------------------------------------------------------------------------
// CircuitBuilder

CircuitBuilder::CircuitBuilder(int n_inputs) : n_inputs_(n_inputs) {
  if (n_inputs_ < 1) throw Error(ErrorKind::InputShape, "builder needs at least one input");
}

CircuitBuilder::Wire CircuitBuilder::input(int i) const {
  if (i < 1 || i > n_inputs_) throw Error(ErrorKind::IndexRange, "builder input out of range");
  return Wire{i};
}

CircuitBuilder::Wire CircuitBuilder::constant(uint8_t bit) const {
  return Wire{bit ? kConst1 : kConst0};
}

bool CircuitBuilder::is_const(Wire w, uint8_t bit) const {
  return w.tag == (bit ? kConst1 : kConst0);
}

Operand CircuitBuilder::operand(Wire w) const {
  if (w.tag >= 1 && w.tag <= n_inputs_) return Operand{true, w.tag};
  if (w.tag > n_inputs_) return Operand{false, w.tag - n_inputs_ - 1};
  throw Error(ErrorKind::Internal, "constant wire used as operand");
}

CircuitBuilder::Wire CircuitBuilder::emit(GateKind kind, Wire a, Wire b) {
  if (kind != GateKind::Not && b.tag < a.tag) std::swap(a, b);  // commutative canonical order
  auto key = std::make_tuple(static_cast<int>(kind), a.tag, b.tag);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  gates_.push_back(Gate{"", kind, operand(a), operand(kind == GateKind::Not ? a : b)});
  Wire w{n_inputs_ + static_cast<int>(gates_.size())};
  cache_.emplace(key, w);
  return w;
}

CircuitBuilder::Wire CircuitBuilder::and_(Wire a, Wire b) {
  if (is_const(a, 0) || is_const(b, 0)) return constant(0);
  if (is_const(a, 1)) return b;
  if (is_const(b, 1)) return a;
  if (a == b) return a;
  return emit(GateKind::And, a, b);
}

CircuitBuilder::Wire CircuitBuilder::or_(Wire a, Wire b) {
  if (is_const(a, 1) || is_const(b, 1)) return constant(1);
  if (is_const(a, 0)) return b;
  if (is_const(b, 0)) return a;
  if (a == b) return a;
  return emit(GateKind::Or, a, b);
}

CircuitBuilder::Wire CircuitBuilder::not_(Wire a) {
  if (is_const(a, 0)) return constant(1);
  if (is_const(a, 1)) return constant(0);
  if (a.tag > n_inputs_) {
    const Gate& g = gates_[a.tag - n_inputs_ - 1];
    if (g.kind == GateKind::Not)
      return g.a.is_input ? Wire{g.a.index} : Wire{n_inputs_ + 1 + g.a.index};
  }
  return emit(GateKind::Not, a, a);
}

CircuitBuilder::Wire CircuitBuilder::xor_(Wire a, Wire b) {
  if (a == b) return constant(0);
  return and_(or_(a, b), not_(and_(a, b)));
}

CircuitBuilder::Wire CircuitBuilder::xnor_(Wire a, Wire b) {
  if (a == b) return constant(1);
  return or_(and_(a, b), and_(not_(a), not_(b)));
}

CircuitBuilder::Wire CircuitBuilder::mux(Wire sel, Wire if0, Wire if1) {
  if (if0 == if1) return if0;
  if (is_const(sel, 0)) return if0;
  if (is_const(sel, 1)) return if1;
  if (is_const(if0, 0)) return and_(sel, if1);
  if (is_const(if0, 1)) return or_(not_(sel), if1);
  if (is_const(if1, 0)) return and_(not_(sel), if0);
  if (is_const(if1, 1)) return or_(sel, if0);
  return or_(and_(not_(sel), if0), and_(sel, if1));
}

CircuitBuilder::Wire CircuitBuilder::inline_circuit(const Circuit& c, std::span<const Wire> inputs) {
  if (static_cast<int>(inputs.size()) != c.n_inputs())
    throw Error(ErrorKind::InputShape, "inline_circuit wire count mismatch");
  std::vector<Wire> value(c.gates().size(), Wire{kConst0});
  for (size_t g = 0; g < c.gates().size(); ++g) {
    const Gate& gate = c.gates()[g];
    auto wire_of = [&](const Operand& op) {
      return op.is_input ? inputs[op.index - 1] : value[op.index];
    };
    switch (gate.kind) {
      case GateKind::And: value[g] = and_(wire_of(gate.a), wire_of(gate.b)); break;
      case GateKind::Or: value[g] = or_(wire_of(gate.a), wire_of(gate.b)); break;
      case GateKind::Not: value[g] = not_(wire_of(gate.a)); break;
    }
  }
  return value[c.output()];
}

Circuit CircuitBuilder::finish(Wire output) {
  if (output.tag == kConst0 || output.tag == kConst1) {
    Wire x1 = input(1);
    Wire nx1 = not_(x1);
    output = output.tag == kConst0 ? emit(GateKind::And, x1, nx1) : emit(GateKind::Or, x1, nx1);
  } else if (output.tag <= n_inputs_) {
    // Bare wire: materialize one identity gate so the output is a gate.
    gates_.push_back(Gate{"", GateKind::Or, operand(output), operand(output)});
    output = Wire{n_inputs_ + static_cast<int>(gates_.size())};
  }
  // Sweep gates unreachable from the output (constant folding can orphan
  // eagerly built subexpressions).
  const int out_gate = output.tag - n_inputs_ - 1;
  std::vector<bool> live(gates_.size(), false);
  std::vector<int> stack{out_gate};
  while (!stack.empty()) {
    int g = stack.back();
    stack.pop_back();
    if (live[g]) continue;
    live[g] = true;
    for (const Operand* op : {&gates_[g].a, &gates_[g].b})
      if (!op->is_input) stack.push_back(op->index);
  }
  std::vector<int> remap(gates_.size(), -1);
  std::vector<Gate> gates;
  for (size_t g = 0; g < gates_.size(); ++g) {
    if (!live[g]) continue;
    remap[g] = static_cast<int>(gates.size());
    Gate gate = gates_[g];
    if (!gate.a.is_input) gate.a.index = remap[gate.a.index];
    if (!gate.b.is_input) gate.b.index = remap[gate.b.index];
    gate.id = "g" + std::to_string(gates.size() + 1);
    gates.push_back(gate);
  }
  return Circuit(n_inputs_, std::move(gates), remap[out_gate]);
}

// ---------------------------------------------------------------------------
// Constructions

Circuit decision_tree_to_circuit(const DecisionTree& t) {
  CircuitBuilder b(t.space_size());
  std::map<int, CircuitBuilder::Wire> memo;
  auto rec = [&](auto&& self, int child) -> CircuitBuilder::Wire {
    if (child == DecisionTree::kLeaf0) return b.constant(0);
    if (child == DecisionTree::kLeaf1) return b.constant(1);
    auto it = memo.find(child);
    if (it != memo.end()) return it->second;
    const DecisionTree::Node& nd = t.nodes()[child];
    CircuitBuilder::Wire w =
        b.mux(b.input(nd.index + 1), self(self, nd.c0), self(self, nd.c1));
    memo.emplace(child, w);
    return w;
  };
  return b.finish(rec(rec, t.root()));
}

Circuit majority_circuit(int t) {
  if (t < 1 || t % 2 == 0)
    throw Error(ErrorKind::Precondition,
                "majority_circuit requires odd t >= 1, got " + std::to_string(t));
  CircuitBuilder b(t);
  if (t == 1) return b.finish(b.input(1));

  // Popcount by 3:2 full-adder compression, then compare against (t+1)/2.
  std::vector<std::vector<CircuitBuilder::Wire>> buckets(1);
  for (int i = 1; i <= t; ++i) buckets[0].push_back(b.input(i));
  for (size_t w = 0; w < buckets.size(); ++w) {
    while (buckets[w].size() >= 2) {
      if (buckets.size() == w + 1) buckets.emplace_back();
      if (buckets[w].size() >= 3) {
        auto a = buckets[w].back(); buckets[w].pop_back();
        auto c = buckets[w].back(); buckets[w].pop_back();
        auto d = buckets[w].back(); buckets[w].pop_back();
        auto ab = b.xor_(a, c);
        buckets[w].push_back(b.xor_(ab, d));
        buckets[w + 1].push_back(b.or_(b.and_(a, c), b.and_(d, ab)));
      } else {
        auto a = buckets[w].back(); buckets[w].pop_back();
        auto c = buckets[w].back(); buckets[w].pop_back();
        buckets[w].push_back(b.xor_(a, c));
        buckets[w + 1].push_back(b.and_(a, c));
      }
    }
  }
  const uint64_t threshold = static_cast<uint64_t>(t + 1) / 2;
  CircuitBuilder::Wire ge = b.constant(1);
  for (size_t w = 0; w < buckets.size(); ++w) {
    CircuitBuilder::Wire p = buckets[w].empty() ? b.constant(0) : buckets[w][0];
    ge = ((threshold >> w) & 1) ? b.and_(p, ge) : b.or_(p, ge);
  }
  return b.finish(ge);
}

Circuit parity_circuit(int n) {
  if (n < 1) throw Error(ErrorKind::InputShape, "parity_circuit needs n >= 1");
  CircuitBuilder b(n);
  std::vector<CircuitBuilder::Wire> layer;
  for (int i = 1; i <= n; ++i) layer.push_back(b.input(i));
  while (layer.size() > 1) {
    std::vector<CircuitBuilder::Wire> next;
    for (size_t i = 0; i + 1 < layer.size(); i += 2) next.push_back(b.xor_(layer[i], layer[i + 1]));
    if (layer.size() % 2) next.push_back(layer.back());
    layer = std::move(next);
  }
  return b.finish(layer[0]);
}

Circuit circuit_for_function(const BoolFn& f) {
  CircuitBuilder b(f.n());
  std::map<Bits, CircuitBuilder::Wire> memo;
  // Shannon expansion on the highest variable of each subtable.
  auto rec = [&](auto&& self, const Bits& table, int nvars) -> CircuitBuilder::Wire {
    auto it = memo.find(table);
    if (it != memo.end()) return it->second;
    CircuitBuilder::Wire w{0};
    bool all0 = std::all_of(table.begin(), table.end(), [](uint8_t v) { return v == 0; });
    bool all1 = std::all_of(table.begin(), table.end(), [](uint8_t v) { return v == 1; });
    if (all0 || all1) {
      w = b.constant(all1 ? 1 : 0);
    } else {
      size_t half = table.size() / 2;
      Bits lo(table.begin(), table.begin() + half);
      Bits hi(table.begin() + half, table.end());
      w = b.mux(b.input(nvars), self(self, lo, nvars - 1), self(self, hi, nvars - 1));
    }
    memo.emplace(table, w);
    return w;
  };
  return b.finish(rec(rec, f.table(), f.n()));
}

}  // namespace dqc
