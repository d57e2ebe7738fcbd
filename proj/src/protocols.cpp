// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#include "dqc/protocols.hpp"

#include <algorithm>

namespace dqc {

namespace {

// ---------------------------------------------------------------------------
// Karchmer-Wigderson

// Follows selector bits from the root; returns the child reached after
// consuming as many bits as possible (stops at a literal).
int kw_walk(const NormalizedCircuit& c, std::span<const uint8_t> selectors, size_t* consumed) {
  int cur = c.root();
  size_t used = 0;
  while (!NormalizedCircuit::is_literal(cur) && used < selectors.size()) {
    cur = c.node(cur).child[selectors[used] ? 1 : 0];
    ++used;
  }
  if (consumed) *consumed = used;
  return cur;
}

class KwStrategy final : public ProverStrategy {
 public:
  KwStrategy(std::shared_ptr<const NormalizedCircuit> c, int role) : c_(std::move(c)), role_(role) {}

  uint8_t next_bit(std::span<const uint8_t> x, std::span<const uint8_t> history) const override {
    size_t consumed = 0;
    int cur = kw_walk(*c_, history, &consumed);
    // Past the leaf, or positioned at a literal: the round bit is a dummy.
    if (consumed < history.size() || NormalizedCircuit::is_literal(cur)) return 0;
    const auto& nd = c_->node(cur);
    GateKind mine = role_ == 0 ? GateKind::And : GateKind::Or;
    if (nd.kind != mine) return 0;
    uint8_t want = role_ == 0 ? 0 : 1;  // Prover 0 chases 0-children, Prover 1 chases 1s
    if (c_->eval_child(nd.child[0], x) == want) return 0;
    if (c_->eval_child(nd.child[1], x) == want) return 1;
    return 0;  // no witnessing child; the claim is lost, point left
  }

 private:
  std::shared_ptr<const NormalizedCircuit> c_;
  int role_;
};

class KwVerifier final : public Verifier {
 public:
  KwVerifier(std::shared_ptr<const NormalizedCircuit> c, IndexSpace space)
      : c_(std::move(c)), space_(space) {}

  IndexSpace space() const override { return space_; }
  int ell() const override { return c_->depth() + 1; }

  VerifierAction act(std::span<const IndexedBit> history) const override {
    int cur = c_->root();
    size_t h = 0;
    int depth = 0;
    while (!NormalizedCircuit::is_literal(cur)) {
      if (h == history.size()) return VerifierAction::query(space_.n + depth);
      cur = c_->node(cur).child[history[h].bit ? 1 : 0];
      ++h;
      ++depth;
    }
    const auto& lit = c_->literal(NormalizedCircuit::literal_index(cur));
    if (h == history.size()) return VerifierAction::query(space_.x_pos(lit.var));
    uint8_t value = history[h].bit;
    return VerifierAction::decide(static_cast<uint8_t>(value ^ (lit.negated ? 1 : 0)));
  }

 private:
  std::shared_ptr<const NormalizedCircuit> c_;
  IndexSpace space_;
};

// ---------------------------------------------------------------------------
// Cross-examination (layered: `base` prefix rounds, then claims, then the
// challenge index)

struct XLayout {
  int n = 0;
  int base = 0;  // prefix rounds replayed from an inner debate
  int m = 0;     // gate count of the examined circuit
  int b = 0;     // challenge index width
  int k = 0;     // base + m + b

  IndexSpace space() const { return IndexSpace{n, k}; }

  int claim_pos(int gate_1based) const { return space().alpha_pos(base + gate_1based); }
  int challenge_pos(int j_1based) const { return space().beta_pos(base + m + j_1based); }

  int operand_pos(const Operand& op) const {
    // The examined circuit's inputs are laid out exactly as index-space
    // positions 0 .. n+2*base-1 (x then the prefix transcript).
    return op.is_input ? op.index - 1 : claim_pos(op.index + 1);
  }

  int challenge_gate(std::span<const uint8_t> bits) const {
    uint32_t v = 0;
    for (uint8_t bit : bits) v = (v << 1) | bit;
    return static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(v) + 1,
                                               static_cast<uint64_t>(m)));
  }
};

class XStrategy0 final : public ProverStrategy {
 public:
  XStrategy0(std::shared_ptr<const Circuit> c, XLayout layout,
             std::shared_ptr<const ProverStrategy> prefix)
      : c_(std::move(c)), layout_(layout), prefix_(std::move(prefix)) {}

  uint8_t next_bit(std::span<const uint8_t> x, std::span<const uint8_t> history) const override {
    int round = static_cast<int>(history.size()) / 2 + 1;
    if (round <= layout_.base) return prefix_->next_bit(x, history);
    if (round > layout_.base + layout_.m) return 0;  // challenge rounds: dummies
    Bits w(x.begin(), x.end());
    w.insert(w.end(), history.begin(), history.begin() + 2 * layout_.base);
    return c_->eval_gates(w)[round - layout_.base - 1];
  }

 private:
  std::shared_ptr<const Circuit> c_;
  XLayout layout_;
  std::shared_ptr<const ProverStrategy> prefix_;
};

class XStrategy1 final : public ProverStrategy {
 public:
  XStrategy1(std::shared_ptr<const Circuit> c, XLayout layout,
             std::shared_ptr<const ProverStrategy> prefix)
      : c_(std::move(c)), layout_(layout), prefix_(std::move(prefix)) {}

  uint8_t next_bit(std::span<const uint8_t> x, std::span<const uint8_t> history) const override {
    int round = static_cast<int>(history.size() + 1) / 2;
    if (round <= layout_.base) return prefix_->next_bit(x, history);
    if (round <= layout_.base + layout_.m) return 0;  // claim rounds: dummies
    Bits w(x.begin(), x.end());
    w.insert(w.end(), history.begin(), history.begin() + 2 * layout_.base);
    Bits claims(layout_.m);
    for (int i = 0; i < layout_.m; ++i) claims[i] = history[2 * (layout_.base + i)];
    int t = std::min(first_inconsistent_gate(*c_, claims, w), layout_.m);
    int j = round - layout_.base - layout_.m;  // 1..b, MSB first
    return static_cast<uint8_t>((static_cast<uint32_t>(t - 1) >> (layout_.b - j)) & 1);
  }

 private:
  std::shared_ptr<const Circuit> c_;
  XLayout layout_;
  std::shared_ptr<const ProverStrategy> prefix_;
};

class XVerifier final : public Verifier {
 public:
  XVerifier(std::shared_ptr<const Circuit> c, XLayout layout) : c_(std::move(c)), layout_(layout) {}

  IndexSpace space() const override { return layout_.space(); }
  int ell() const override { return layout_.b + 3; }

  VerifierAction act(std::span<const IndexedBit> history) const override {
    const size_t h = history.size();
    if (h < static_cast<size_t>(layout_.b))
      return VerifierAction::query(layout_.challenge_pos(static_cast<int>(h) + 1));
    Bits challenge(layout_.b);
    for (int i = 0; i < layout_.b; ++i) challenge[i] = history[i].bit;
    const int t = layout_.challenge_gate(challenge);
    const Gate& gate = c_->gates()[t - 1];

    // Probe schedule: claimed value of gate t, then its distinct operands.
    std::vector<int> needed{layout_.claim_pos(t)};
    auto push_unique = [&](int pos) {
      if (std::find(needed.begin(), needed.end(), pos) == needed.end()) needed.push_back(pos);
    };
    push_unique(layout_.operand_pos(gate.a));
    if (gate.kind != GateKind::Not) push_unique(layout_.operand_pos(gate.b));

    size_t step = h - layout_.b;
    if (step < needed.size()) return VerifierAction::query(needed[step]);

    auto answer = [&](int pos) {
      for (const IndexedBit& ib : history)
        if (ib.index == pos) return ib.bit;
      throw Error(ErrorKind::Internal, "cross-exam verifier missing a probed answer");
    };
    uint8_t claimed = answer(layout_.claim_pos(t));
    uint8_t va = answer(layout_.operand_pos(gate.a));
    uint8_t expect;
    switch (gate.kind) {
      case GateKind::And: expect = va & answer(layout_.operand_pos(gate.b)); break;
      case GateKind::Or: expect = va | answer(layout_.operand_pos(gate.b)); break;
      case GateKind::Not: expect = va ^ 1; break;
    }
    if (claimed != expect) return VerifierAction::decide(1);
    if (t == layout_.m && claimed == 1) return VerifierAction::decide(1);
    return VerifierAction::decide(0);
  }

 private:
  std::shared_ptr<const Circuit> c_;
  XLayout layout_;
};

}  // namespace

int crossexam_challenge_width(int m) { return std::max(ceil_log2(static_cast<uint64_t>(m)), 1); }

int first_inconsistent_gate(const Circuit& c, std::span<const uint8_t> claims,
                            std::span<const uint8_t> inputs) {
  if (static_cast<int>(claims.size()) != c.size())
    throw Error(ErrorKind::InputShape, "claim vector length mismatch");
  for (int g = 0; g < c.size(); ++g) {
    const Gate& gate = c.gates()[g];
    auto v = [&](const Operand& op) {
      return op.is_input ? inputs[op.index - 1] : claims[op.index];
    };
    uint8_t expect;
    switch (gate.kind) {
      case GateKind::And: expect = v(gate.a) & v(gate.b); break;
      case GateKind::Or: expect = v(gate.a) | v(gate.b); break;
      case GateKind::Not: expect = v(gate.a) ^ 1; break;
    }
    if (claims[g] != expect) return g + 1;
  }
  return c.size() + 1;
}

DebateSystem build_kw_debate(std::shared_ptr<const NormalizedCircuit> c) {
  if (!c) throw Error(ErrorKind::Precondition, "build_kw_debate needs a normalized circuit");
  const int d = c->depth();
  DebateSystem sys;
  sys.n = c->n_inputs();
  sys.k = (d + 1) / 2;
  sys.ell_bound = d + 1;
  sys.strategy0 = std::make_shared<KwStrategy>(c, 0);
  sys.strategy1 = std::make_shared<KwStrategy>(c, 1);
  sys.verifier = std::make_shared<KwVerifier>(c, sys.space());
  sys.provenance = "kw";
  return sys;
}

DebateSystem build_crossexam_layered(std::shared_ptr<const Circuit> c, int n, int base,
                                     std::shared_ptr<const ProverStrategy> prefix0,
                                     std::shared_ptr<const ProverStrategy> prefix1) {
  if (!c) throw Error(ErrorKind::Precondition, "cross-examination needs a circuit");
  if (c->n_inputs() != n + 2 * base)
    throw Error(ErrorKind::Precondition,
                "cross-examined circuit must have n + 2*base = " + std::to_string(n + 2 * base) +
                    " inputs, has " + std::to_string(c->n_inputs()));
  if (c->output() != c->size() - 1)
    throw Error(ErrorKind::Precondition,
                "cross-examination requires the output to be the last gate");
  if (base > 0 && (!prefix0 || !prefix1))
    throw Error(ErrorKind::Precondition, "layered cross-examination needs prefix strategies");
  XLayout layout;
  layout.n = n;
  layout.base = base;
  layout.m = c->size();
  layout.b = crossexam_challenge_width(layout.m);
  layout.k = base + layout.m + layout.b;
  DebateSystem sys;
  sys.n = n;
  sys.k = layout.k;
  sys.ell_bound = layout.b + 3;
  sys.strategy0 = std::make_shared<XStrategy0>(c, layout, std::move(prefix0));
  sys.strategy1 = std::make_shared<XStrategy1>(c, layout, std::move(prefix1));
  sys.verifier = std::make_shared<XVerifier>(c, layout);
  sys.provenance = "crossexam";
  return sys;
}

DebateSystem build_crossexam_debate(std::shared_ptr<const Circuit> c) {
  if (!c) throw Error(ErrorKind::Precondition, "build_crossexam_debate needs a circuit");
  const int n = c->n_inputs();
  return build_crossexam_layered(std::move(c), n, 0, nullptr, nullptr);
}

}  // namespace dqc
