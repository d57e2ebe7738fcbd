#pragma once

#include <memory>

#include "dqc/circuit.hpp"
#include "dqc/debate.hpp"
#include "dqc/protocols.hpp"

namespace dqc::testing {

inline std::shared_ptr<Circuit> circuit_of(const std::string& netlist) {
  return std::make_shared<Circuit>(Circuit::parse_netlist(netlist));
}

inline DebateSystem kw_for(const Circuit& c) {
  auto norm = std::make_shared<NormalizedCircuit>(NormalizedCircuit::normalize(c));
  return build_kw_debate(norm);
}

inline DebateSystem crossexam_for(std::shared_ptr<Circuit> c) {
  return build_crossexam_debate(std::move(c));
}

// Verifier deciding a constant, ignoring the input entirely.
class ConstantVerifier final : public Verifier {
 public:
  ConstantVerifier(IndexSpace space, uint8_t verdict) : space_(space), verdict_(verdict) {}
  IndexSpace space() const override { return space_; }
  int ell() const override { return 0; }
  VerifierAction act(std::span<const IndexedBit>) const override {
    return VerifierAction::decide(verdict_);
  }

 private:
  IndexSpace space_;
  uint8_t verdict_;
};

// Queries one fixed index and returns the answered bit.
class EchoVerifier final : public Verifier {
 public:
  EchoVerifier(IndexSpace space, int index) : space_(space), index_(index) {}
  IndexSpace space() const override { return space_; }
  int ell() const override { return 1; }
  VerifierAction act(std::span<const IndexedBit> history) const override {
    if (history.empty()) return VerifierAction::query(index_);
    return VerifierAction::decide(history[0].bit);
  }

 private:
  IndexSpace space_;
  int index_;
};

class ZeroStrategy final : public ProverStrategy {
 public:
  uint8_t next_bit(std::span<const uint8_t>, std::span<const uint8_t>) const override { return 0; }
};

inline DebateSystem system_with_verifier(int n, int k, std::shared_ptr<const Verifier> v,
                                         int ell_bound) {
  DebateSystem sys;
  sys.n = n;
  sys.k = k;
  sys.ell_bound = ell_bound;
  sys.strategy0 = std::make_shared<ZeroStrategy>();
  sys.strategy1 = std::make_shared<ZeroStrategy>();
  sys.verifier = std::move(v);
  sys.provenance = "test";
  return sys;
}

inline BitChooser constant_bits(uint8_t bit) {
  return [bit](std::span<const uint8_t>) { return std::optional<uint8_t>(bit); };
}

inline BitChooser strategy_bits(std::shared_ptr<const ProverStrategy> s, Bits x) {
  return [s, x = std::move(x)](std::span<const uint8_t> history) {
    return std::optional<uint8_t>(s->next_bit(x, history));
  };
}

}  // namespace dqc::testing
