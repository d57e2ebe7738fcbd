// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#include "dqc/pspace.hpp"

#include <algorithm>

namespace dqc {

namespace {

uint16_t pack_config(std::span<const uint8_t> cfg) {
  return static_cast<uint16_t>(index_of_bits(cfg));
}

Bits unpack_config(uint16_t packed, int w) { return bits_of_index(packed, w); }

}  // namespace

void ToyMachine::validate() const {
  if (w < 1 || w > 12)
    throw Error(ErrorKind::InputShape, "machine width must be in [1,12], got " + std::to_string(w));
  if (n < 1 || n > 20) throw Error(ErrorKind::InputShape, "machine input count out of range");
  if (horizon_t < 0 || horizon_t > 16)
    throw Error(ErrorKind::InputShape, "machine horizon T must be in [0,16]");
  if (static_cast<int>(step.size()) != w)
    throw Error(ErrorKind::InputShape, "machine needs one step circuit per configuration bit");
  for (const Circuit& c : step)
    if (c.n_inputs() != w + n)
      throw Error(ErrorKind::InputShape, "step circuits must have w+n inputs");
  if (!accept_circuit || accept_circuit->n_inputs() != w)
    throw Error(ErrorKind::InputShape, "accept circuit must have w inputs");
  if (static_cast<int>(init.size()) != w)
    throw Error(ErrorKind::InputShape, "init template needs one literal per configuration bit");
  for (const InitLit& lit : init)
    if ((lit.kind == InitLit::Var || lit.kind == InitLit::NegVar) && (lit.var < 1 || lit.var > n))
      throw Error(ErrorKind::IndexRange, "init template variable out of range");
}

Bits ToyMachine::init_config(std::span<const uint8_t> x) const {
  Bits cfg(w, 0);
  for (int j = 0; j < w; ++j) {
    switch (init[j].kind) {
      case InitLit::Zero: cfg[j] = 0; break;
      case InitLit::One: cfg[j] = 1; break;
      case InitLit::Var: cfg[j] = x[init[j].var - 1]; break;
      case InitLit::NegVar: cfg[j] = x[init[j].var - 1] ^ 1; break;
    }
  }
  return cfg;
}

Bits ToyMachine::step_once(std::span<const uint8_t> cfg, std::span<const uint8_t> x) const {
  Bits in(cfg.begin(), cfg.end());
  in.insert(in.end(), x.begin(), x.end());
  Bits out(w, 0);
  for (int j = 0; j < w; ++j) out[j] = step[j].eval(in);
  return out;
}

MachineRun machine_run(const ToyMachine& m, std::span<const uint8_t> x) {
  if (static_cast<int>(x.size()) != m.n)
    throw Error(ErrorKind::InputShape, "machine input length mismatch");
  Bits cfg = m.init_config(x);
  const uint64_t steps = pow2(m.horizon_t);
  for (uint64_t s = 0; s < steps; ++s) cfg = m.step_once(cfg, x);
  uint8_t acc = m.accept().eval(cfg);
  return MachineRun{std::move(cfg), acc};
}

MachineRun machine_run_jump(const ToyMachine& m, std::span<const uint8_t> x) {
  if (static_cast<int>(x.size()) != m.n)
    throw Error(ErrorKind::InputShape, "machine input length mismatch");
  const uint32_t states = static_cast<uint32_t>(pow2(m.w));
  std::vector<uint16_t> jump(states);
  for (uint32_t c = 0; c < states; ++c)
    jump[c] = pack_config(m.step_once(unpack_config(static_cast<uint16_t>(c), m.w), x));
  // jump now advances one step; square it T times to advance 2^T.
  for (int t = 0; t < m.horizon_t; ++t) {
    std::vector<uint16_t> next(states);
    for (uint32_t c = 0; c < states; ++c) next[c] = jump[jump[c]];
    jump = std::move(next);
  }
  uint16_t fin = jump[pack_config(m.init_config(x))];
  Bits cfg = unpack_config(fin, m.w);
  uint8_t acc = m.accept().eval(cfg);
  return MachineRun{std::move(cfg), acc};
}

BoolFn machine_truth_table(const ToyMachine& m) {
  Bits table(pow2(m.n), 0);
  for (uint32_t v = 0; v < table.size(); ++v)
    table[v] = machine_run(m, bits_of_index(v, m.n)).accept_bit;
  return BoolFn(m.n, std::move(table), m.label.empty() ? "machine" : m.label);
}

// ---------------------------------------------------------------------------
// Builtin machines

namespace {

// counter < bound over counter wires (LSB first), constant bound.
CircuitBuilder::Wire less_than_const(CircuitBuilder& b,
                                     const std::vector<CircuitBuilder::Wire>& counter,
                                     uint32_t bound) {
  CircuitBuilder::Wire lt = b.constant(0);
  for (size_t j = 0; j < counter.size(); ++j) {
    lt = ((bound >> j) & 1) ? b.or_(b.not_(counter[j]), lt) : b.and_(b.not_(counter[j]), lt);
  }
  return lt;
}

// x_{counter+1} via a mux tree; counter values >= n fall back to x_1.
CircuitBuilder::Wire select_x(CircuitBuilder& b, const std::vector<CircuitBuilder::Wire>& counter,
                              const std::vector<CircuitBuilder::Wire>& x, int n) {
  auto rec = [&](auto&& self, size_t bit, uint32_t prefix) -> CircuitBuilder::Wire {
    if (bit == counter.size()) {
      int v = static_cast<int>(prefix);
      return v < n ? x[v] : x[0];
    }
    return b.mux(counter[bit], self(self, bit + 1, prefix),
                 self(self, bit + 1, prefix | (1u << bit)));
  };
  return rec(rec, 0, 0);
}

Circuit identity_gate_circuit(int n_inputs, int which) {
  CircuitBuilder b(n_inputs);
  return b.finish(b.or_(b.input(which), b.input(which)));
}

ToyMachine parity_accumulator(int n, int horizon_t, bool saturating) {
  if (!saturating) {
    if (n < 2 || (n & (n - 1)) != 0)
      throw Error(ErrorKind::InputShape, "wrap-around parity accumulator needs power-of-two n");
  }
  const int cw = saturating ? ceil_log2(static_cast<uint64_t>(n) + 1)
                            : ceil_log2(static_cast<uint64_t>(n));
  ToyMachine m;
  m.n = n;
  m.w = 1 + cw;
  m.horizon_t = horizon_t;
  m.label = (saturating ? "parityacc:" : "parityaccwrap:") + std::to_string(n);
  // Config: c_1 = accumulator, c_2..c_w = counter (LSB first). Each active
  // step XORs x_{counter+1} into the accumulator and increments the counter;
  // the saturating variant goes idle once counter reaches n.
  for (int out_bit = 1; out_bit <= m.w; ++out_bit) {
    CircuitBuilder b(m.w + n);
    std::vector<CircuitBuilder::Wire> counter;
    for (int j = 0; j < cw; ++j) counter.push_back(b.input(2 + j));
    std::vector<CircuitBuilder::Wire> x;
    for (int i = 0; i < n; ++i) x.push_back(b.input(m.w + 1 + i));
    CircuitBuilder::Wire active =
        saturating ? less_than_const(b, counter, static_cast<uint32_t>(n)) : b.constant(1);
    CircuitBuilder::Wire out{0};
    if (out_bit == 1) {
      out = b.xor_(b.input(1), b.and_(active, select_x(b, counter, x, n)));
    } else {
      // counter + active, ripple carry up to this bit.
      CircuitBuilder::Wire carry = active;
      for (int j = 0; j < out_bit - 2; ++j) carry = b.and_(counter[j], carry);
      out = b.xor_(counter[out_bit - 2], carry);
    }
    m.step.push_back(b.finish(out));
  }
  m.accept_circuit = identity_gate_circuit(m.w, 1);
  m.init.assign(m.w, InitLit{InitLit::Zero, 0});
  m.validate();
  return m;
}

ToyMachine counter_machine(int w, int horizon_t) {
  ToyMachine m;
  m.n = 1;  // x is ignored
  m.w = w;
  m.horizon_t = horizon_t;
  m.label = "counter:" + std::to_string(w);
  for (int out_bit = 1; out_bit <= w; ++out_bit) {
    CircuitBuilder b(w + 1);
    CircuitBuilder::Wire carry = b.constant(1);
    for (int j = 1; j < out_bit; ++j) carry = b.and_(b.input(j), carry);
    m.step.push_back(b.finish(b.xor_(b.input(out_bit), carry)));
  }
  m.accept_circuit = identity_gate_circuit(w, 1);
  m.init.assign(w, InitLit{InitLit::Zero, 0});
  m.validate();
  return m;
}

ToyMachine identity_machine(int w, int horizon_t) {
  ToyMachine m;
  m.n = 1;
  m.w = w;
  m.horizon_t = horizon_t;
  m.label = "identity:" + std::to_string(w);
  for (int out_bit = 1; out_bit <= w; ++out_bit)
    m.step.push_back(identity_gate_circuit(w + 1, out_bit));
  m.accept_circuit = identity_gate_circuit(w, 1);
  m.init.assign(w, InitLit{InitLit::Zero, 0});
  m.validate();
  return m;
}

}  // namespace

ToyMachine ToyMachine::builtin(const std::string& spec, int horizon_t) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorKind::Parse, "machine spec must be name:<param>, got '" + spec + "'");
  const std::string name = spec.substr(0, colon);
  int param = 0;
  try {
    param = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "bad parameter in machine spec '" + spec + "'");
  }
  if (name == "counter") return counter_machine(param, horizon_t);
  if (name == "identity") return identity_machine(param, horizon_t);
  if (name == "parityacc") return parity_accumulator(param, horizon_t, true);
  if (name == "parityaccwrap") return parity_accumulator(param, horizon_t, false);
  throw Error(ErrorKind::Parse, "unknown builtin machine '" + name + "'");
}

// ---------------------------------------------------------------------------
// Bisection debate

namespace {

// Round layout: rounds 1..w carry the claimed final configuration (beta
// bits); phase p = 1..T then occupies w+1 rounds: w midpoint-claim rounds
// (beta) followed by one selection round (alpha).
struct BisectionLayout {
  int w = 0;
  int n = 0;
  int t = 0;
  int k = 0;

  static BisectionLayout of(const ToyMachine& m) {
    BisectionLayout l;
    l.w = m.w;
    l.n = m.n;
    l.t = m.horizon_t;
    l.k = m.w + m.horizon_t * (m.w + 1);
    return l;
  }

  IndexSpace space() const { return IndexSpace{n, k}; }
  int final_round(int bit) const { return bit; }                            // 1-based bit
  int mid_round(int phase, int bit) const { return w + (phase - 1) * (w + 1) + bit; }
  int sel_round(int phase) const { return w + (phase - 1) * (w + 1) + w + 1; }

  // (phase, position) of a round past the final-configuration block;
  // position w+1 is the selection round.
  std::pair<int, int> phase_pos(int round) const {
    int q = round - w - 1;
    return {q / (w + 1) + 1, q % (w + 1) + 1};
  }
};

// Times and claim sources of the disputed unit interval after selections.
struct IntervalState {
  uint64_t lo = 0;
  uint64_t hi = 0;
  int lo_phase = 0;  // phase whose midpoint became the lo claim; 0 = init
  int hi_phase = 0;  // phase whose midpoint became the hi claim; 0 = final config
};

IntervalState fold_interval(const BisectionLayout& l, std::span<const uint8_t> selections) {
  IntervalState s;
  s.lo = 0;
  s.hi = pow2(l.t);
  for (size_t p = 0; p < selections.size(); ++p) {
    uint64_t mid = (s.lo + s.hi) / 2;
    if (selections[p]) {
      s.lo = mid;
      s.lo_phase = static_cast<int>(p) + 1;
    } else {
      s.hi = mid;
      s.hi_phase = static_cast<int>(p) + 1;
    }
  }
  return s;
}

struct BisectionShared {
  std::shared_ptr<const ToyMachine> machine;
  BisectionLayout layout;
  // Packed trajectory per input: traj[x][time] = configuration.
  std::vector<std::vector<uint16_t>> traj;
  // x positions structurally read by the step circuits / init template.
  std::vector<int> step_x_refs;
  std::vector<int> init_x_refs;
};

class BisectionClaimant final : public ProverStrategy {  // Prover 1
 public:
  explicit BisectionClaimant(std::shared_ptr<const BisectionShared> sh) : sh_(std::move(sh)) {}

  uint8_t next_bit(std::span<const uint8_t> x, std::span<const uint8_t> history) const override {
    const BisectionLayout& l = sh_->layout;
    int round = static_cast<int>(history.size() + 1) / 2;
    const auto& traj = sh_->traj[index_of_bits(x)];
    if (round <= l.w) return (traj[pow2(l.t)] >> (round - 1)) & 1;
    auto [phase, pos] = l.phase_pos(round);
    if (pos > l.w) return 0;  // selection round, beta is a dummy
    // True midpoint configuration of the interval left by earlier selections.
    Bits selections;
    for (int p = 1; p < phase; ++p)
      selections.push_back(history[2 * (l.sel_round(p) - 1)]);
    IntervalState st = fold_interval(l, selections);
    uint64_t mid = (st.lo + st.hi) / 2;
    return (traj[mid] >> (pos - 1)) & 1;
  }

 private:
  std::shared_ptr<const BisectionShared> sh_;
};

class BisectionChallenger final : public ProverStrategy {  // Prover 0
 public:
  explicit BisectionChallenger(std::shared_ptr<const BisectionShared> sh) : sh_(std::move(sh)) {}

  uint8_t next_bit(std::span<const uint8_t> x, std::span<const uint8_t> history) const override {
    const BisectionLayout& l = sh_->layout;
    int round = static_cast<int>(history.size()) / 2 + 1;
    if (round <= l.w) return 0;
    auto [phase, pos] = l.phase_pos(round);
    if (pos <= l.w) return 0;  // claim rounds, alpha is a dummy
    // Recurse into the half whose endpoint claim is wrong: a truthful
    // midpoint sends the dispute right, a false one left.
    Bits selections;
    for (int p = 1; p < phase; ++p)
      selections.push_back(history[2 * (l.sel_round(p) - 1)]);
    IntervalState st = fold_interval(l, selections);
    uint64_t mid = (st.lo + st.hi) / 2;
    uint16_t claimed = 0;
    for (int bit = 1; bit <= l.w; ++bit)
      claimed |= static_cast<uint16_t>(history[2 * (l.mid_round(phase, bit) - 1) + 1]) << (bit - 1);
    return claimed == sh_->traj[index_of_bits(x)][mid] ? 1 : 0;
  }

 private:
  std::shared_ptr<const BisectionShared> sh_;
};

class BisectionVerifier final : public Verifier {
 public:
  explicit BisectionVerifier(std::shared_ptr<const BisectionShared> sh) : sh_(std::move(sh)) {}

  IndexSpace space() const override { return sh_->layout.space(); }
  int ell() const override {
    return sh_->layout.t + 3 * sh_->layout.w + static_cast<int>(sh_->step_x_refs.size()) +
           static_cast<int>(sh_->init_x_refs.size());
  }

  VerifierAction act(std::span<const IndexedBit> history) const override {
    const BisectionLayout& l = sh_->layout;
    const IndexSpace sp = l.space();
    std::vector<int> plan;
    for (int p = 1; p <= l.t; ++p) plan.push_back(sp.alpha_pos(l.sel_round(p)));
    for (int bit = 1; bit <= l.w; ++bit) plan.push_back(sp.beta_pos(l.final_round(bit)));
    if (history.size() < plan.size())
      return VerifierAction::query(plan[history.size()]);

    Bits selections(l.t);
    for (int p = 0; p < l.t; ++p) selections[p] = history[p].bit;
    IntervalState st = fold_interval(l, selections);
    auto push_unique = [&](int pos) {
      if (std::find(plan.begin(), plan.end(), pos) == plan.end()) plan.push_back(pos);
    };
    if (st.hi_phase > 0)
      for (int bit = 1; bit <= l.w; ++bit) push_unique(sp.beta_pos(l.mid_round(st.hi_phase, bit)));
    if (st.lo_phase > 0) {
      for (int bit = 1; bit <= l.w; ++bit) push_unique(sp.beta_pos(l.mid_round(st.lo_phase, bit)));
    } else {
      for (int v : sh_->init_x_refs) push_unique(sp.x_pos(v));
    }
    for (int v : sh_->step_x_refs) push_unique(sp.x_pos(v));
    if (history.size() < plan.size())
      return VerifierAction::query(plan[history.size()]);

    auto answer = [&](int pos) -> uint8_t {
      for (const IndexedBit& ib : history)
        if (ib.index == pos) return ib.bit;
      throw Error(ErrorKind::Internal, "bisection verifier missing a probed answer");
    };
    // Probed x bits suffice: unprobed positions are never read by the
    // circuits below, so zeros are safe fillers.
    Bits x(l.n, 0);
    for (int v : sh_->step_x_refs) x[v - 1] = answer(sp.x_pos(v));
    Bits final_cfg(l.w, 0);
    for (int bit = 1; bit <= l.w; ++bit)
      final_cfg[bit - 1] = answer(sp.beta_pos(l.final_round(bit)));
    Bits hi_cfg(l.w, 0);
    if (st.hi_phase > 0) {
      for (int bit = 1; bit <= l.w; ++bit)
        hi_cfg[bit - 1] = answer(sp.beta_pos(l.mid_round(st.hi_phase, bit)));
    } else {
      hi_cfg = final_cfg;
    }
    Bits lo_cfg(l.w, 0);
    if (st.lo_phase > 0) {
      for (int bit = 1; bit <= l.w; ++bit)
        lo_cfg[bit - 1] = answer(sp.beta_pos(l.mid_round(st.lo_phase, bit)));
    } else {
      for (int v : sh_->init_x_refs) x[v - 1] = answer(sp.x_pos(v));
      lo_cfg = sh_->machine->init_config(x);
    }
    uint8_t acc = sh_->machine->accept().eval(final_cfg);
    Bits next = sh_->machine->step_once(lo_cfg, x);
    uint8_t verdict = (acc == 1 && next == hi_cfg) ? 1 : 0;
    return VerifierAction::decide(verdict);
  }

 private:
  std::shared_ptr<const BisectionShared> sh_;
};

std::vector<int> x_refs_of(const Circuit& c, int first_x_input) {
  std::set<int> refs;
  for (const Gate& g : c.gates()) {
    for (const Operand* op : {&g.a, &g.b}) {
      if (op->is_input && op->index > first_x_input - 1) refs.insert(op->index - first_x_input + 1);
    }
    if (g.kind == GateKind::Not) continue;
  }
  return {refs.begin(), refs.end()};
}

}  // namespace

DebateSystem build_bisection_debate(std::shared_ptr<const ToyMachine> m, uint64_t budget) {
  if (!m) throw Error(ErrorKind::Precondition, "bisection debate needs a machine");
  m->validate();
  const uint64_t work = pow2(m->n) * (pow2(m->horizon_t) + 1);
  if (work > budget)
    throw Error(ErrorKind::Budget, "trajectory precomputation needs " + std::to_string(work) +
                                       " configurations, budget is " + std::to_string(budget));

  auto sh = std::make_shared<BisectionShared>();
  sh->machine = m;
  sh->layout = BisectionLayout::of(*m);
  sh->traj.resize(pow2(m->n));
  for (uint32_t xi = 0; xi < pow2(m->n); ++xi) {
    Bits x = bits_of_index(xi, m->n);
    Bits cfg = m->init_config(x);
    auto& row = sh->traj[xi];
    row.reserve(pow2(m->horizon_t) + 1);
    row.push_back(pack_config(cfg));
    for (uint64_t s = 0; s < pow2(m->horizon_t); ++s) {
      cfg = m->step_once(cfg, x);
      row.push_back(pack_config(cfg));
    }
  }
  {
    std::set<int> step_refs;
    for (const Circuit& c : m->step)
      for (int v : x_refs_of(c, m->w + 1)) step_refs.insert(v);
    sh->step_x_refs.assign(step_refs.begin(), step_refs.end());
    std::set<int> init_refs;
    for (const InitLit& lit : m->init)
      if (lit.kind == InitLit::Var || lit.kind == InitLit::NegVar) init_refs.insert(lit.var);
    sh->init_x_refs.assign(init_refs.begin(), init_refs.end());
  }

  DebateSystem sys;
  sys.n = m->n;
  sys.k = sh->layout.k;
  auto verifier = std::make_shared<BisectionVerifier>(sh);
  sys.ell_bound = verifier->ell();
  sys.strategy0 = std::make_shared<BisectionChallenger>(sh);
  sys.strategy1 = std::make_shared<BisectionClaimant>(sh);
  sys.verifier = std::move(verifier);
  sys.provenance = "bisection";
  return sys;
}

Circuit build_bisection_cv(const ToyMachine& m) {
  const BisectionLayout l = BisectionLayout::of(m);
  const IndexSpace sp = l.space();
  CircuitBuilder b(sp.total());
  auto at = [&](int pos) { return b.input(pos + 1); };

  std::vector<CircuitBuilder::Wire> x_wires;
  for (int i = 1; i <= l.n; ++i) x_wires.push_back(at(sp.x_pos(i)));
  std::vector<CircuitBuilder::Wire> final_cfg;
  for (int bit = 1; bit <= l.w; ++bit) final_cfg.push_back(at(sp.beta_pos(l.final_round(bit))));

  // Endpoint claims threaded through the selection muxes.
  std::vector<CircuitBuilder::Wire> lo_cfg;
  for (int bit = 0; bit < l.w; ++bit) {
    switch (m.init[bit].kind) {
      case InitLit::Zero: lo_cfg.push_back(b.constant(0)); break;
      case InitLit::One: lo_cfg.push_back(b.constant(1)); break;
      case InitLit::Var: lo_cfg.push_back(x_wires[m.init[bit].var - 1]); break;
      case InitLit::NegVar: lo_cfg.push_back(b.not_(x_wires[m.init[bit].var - 1])); break;
    }
  }
  std::vector<CircuitBuilder::Wire> hi_cfg = final_cfg;
  for (int p = 1; p <= l.t; ++p) {
    CircuitBuilder::Wire sel = at(sp.alpha_pos(l.sel_round(p)));
    for (int bit = 1; bit <= l.w; ++bit) {
      CircuitBuilder::Wire mid = at(sp.beta_pos(l.mid_round(p, bit)));
      lo_cfg[bit - 1] = b.mux(sel, lo_cfg[bit - 1], mid);
      hi_cfg[bit - 1] = b.mux(sel, mid, hi_cfg[bit - 1]);
    }
  }

  std::vector<CircuitBuilder::Wire> step_in = lo_cfg;
  step_in.insert(step_in.end(), x_wires.begin(), x_wires.end());
  CircuitBuilder::Wire eq = b.constant(1);
  for (int bit = 0; bit < l.w; ++bit) {
    CircuitBuilder::Wire next = b.inline_circuit(m.step[bit], step_in);
    eq = b.and_(eq, b.xnor_(next, hi_cfg[bit]));
  }
  CircuitBuilder::Wire acc = b.inline_circuit(m.accept(), final_cfg);
  return b.finish(b.and_(acc, eq));
}

PspaceResult pspace_pipeline(std::shared_ptr<const ToyMachine> m, uint64_t budget) {
  DebateSystem sys = build_bisection_debate(m, budget);
  PspaceResult res;
  res.uncompiled_max_probes = explore_verifier(*sys.verifier, budget).max_probes;
  res.cv = std::make_shared<Circuit>(build_bisection_cv(*m));
  CompileResult compiled = crossexam_compile(sys, res.cv, budget);
  res.system = std::move(compiled.system);
  res.system.provenance = "bisection+compile";
  res.m = compiled.m;
  res.b = compiled.b;
  res.pairs_checked = compiled.pairs_checked;
  res.compiled_probe_bound = ceil_log2(static_cast<uint64_t>(res.m)) + 3;
  return res;
}

}  // namespace dqc
