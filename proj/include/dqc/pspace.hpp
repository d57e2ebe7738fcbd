// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dqc/circuit.hpp"
#include "dqc/debate.hpp"
#include "dqc/transforms.hpp"

namespace dqc {

// Initial-configuration template entry: constant or a literal over x.
struct InitLit {
  enum Kind { Zero, One, Var, NegVar } kind = Zero;
  int var = 0;  // 1-based when kind is Var/NegVar
};

// Fixed-width deterministic machine run for exactly 2^T steps. Each step
// reads the whole input: step circuit j computes the next value of config
// bit j from (c_1..c_w, x_1..x_n) in that input order.
struct ToyMachine {
  int w = 0;
  int n = 0;
  int horizon_t = 0;  // the T of the 2^T-step horizon
  std::vector<Circuit> step;  // w circuits over w+n inputs
  std::optional<Circuit> accept_circuit;  // predicate over w inputs
  std::vector<InitLit> init;
  std::string label;

  const Circuit& accept() const { return *accept_circuit; }
  void validate() const;

  Bits init_config(std::span<const uint8_t> x) const;
  Bits step_once(std::span<const uint8_t> cfg, std::span<const uint8_t> x) const;

  // Builtins: "counter:<w>", "identity:<w>", "parityacc:<n>" (saturating
  // counter, computes parity of x once 2^T >= n), "parityaccwrap:<n>"
  // (power-of-two n, wrap-around counter). All take T separately.
  static ToyMachine builtin(const std::string& spec, int horizon_t);
};

struct MachineRun {
  Bits final_config;
  uint8_t accept_bit;
};

// Naive route: 2^T explicit step applications.
MachineRun machine_run(const ToyMachine& m, std::span<const uint8_t> x);

// Jump route: successor table over all 2^w configurations, composed by
// repeated squaring. Must agree with machine_run everywhere.
MachineRun machine_run_jump(const ToyMachine& m, std::span<const uint8_t> x);

// f(x) = accept after 2^T steps.
BoolFn machine_truth_table(const ToyMachine& m);

// Footnote bisection debate: Prover 1 writes the claimed final configuration
// and one claimed midpoint configuration per phase (one bit per round,
// opposing bits dummy); Prover 0 selects the disputed half each phase; the
// verifier probes the T selections, the final configuration and the unit
// interval's endpoint claims, applies one step, and checks the accept bit.
// k = w + T(w+1); declared probe bound T + 3w + n.
DebateSystem build_bisection_debate(std::shared_ptr<const ToyMachine> m,
                                    uint64_t budget = pow2(22));

// The bisection verifier as an explicit circuit over n + 2k inputs
// (selection muxes, one inlined step, equality and accept checks).
Circuit build_bisection_cv(const ToyMachine& m);

struct PspaceResult {
  DebateSystem system;          // compiled
  std::shared_ptr<Circuit> cv;
  int m = 0;                    // size of the verifier circuit
  int b = 0;
  int uncompiled_max_probes = 0;
  int compiled_probe_bound = 0;  // ceil(log2 m) + 3
  uint64_t pairs_checked = 0;
};

// Lemma 4.3 at toy scale: bisection debate, verifier circuit, exhaustive
// agreement check, cross-examination compile.
PspaceResult pspace_pipeline(std::shared_ptr<const ToyMachine> m, uint64_t budget);

}  // namespace dqc
