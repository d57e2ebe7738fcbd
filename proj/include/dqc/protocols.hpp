// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dqc/circuit.hpp"
#include "dqc/debate.hpp"

namespace dqc {

// Karchmer-Wigderson descent through a normalized alternating circuit of
// depth d: the transcript holds one child-selector bit per level (Prover 0
// picks at AND levels, Prover 1 at OR levels), the verifier walks the probed
// selectors to a leaf literal and probes that one input. k = ceil(d/2),
// probe bound d + 1.
DebateSystem build_kw_debate(std::shared_ptr<const NormalizedCircuit> c);

// Cross-examination over a circuit with m gates (output must be the last
// gate): Prover 0 writes every gate value in its first m bits, Prover 1
// answers with a B-bit gate index (B = max(ceil(log2 m), 1)), and the
// verifier checks that single gate. Probe bound B + 3.
DebateSystem build_crossexam_debate(std::shared_ptr<const Circuit> c);

// Challenge-index convention shared with crossexam_compile: B bits read
// MSB-first as v, gate index t = min(v + 1, m).
int crossexam_challenge_width(int m);

// Honest challenger rule: lowest gate whose claimed output contradicts its
// gate table on the claimed operand values (gate refs read claims, input
// refs read `inputs`); m+1 when all gates check out.
int first_inconsistent_gate(const Circuit& c, std::span<const uint8_t> claims,
                            std::span<const uint8_t> inputs);

// Cross-examination of circuit `c` laid out after `base` prefix rounds that
// replay the given strategies: rounds base+1..base+m carry Prover 0's gate
// claims, the next B rounds carry Prover 1's challenge index, and the
// verifier routes input-ref probes of `c` to index-space position ref-1.
// c must have n + 2*base inputs and its output as the last gate. This single
// code path backs both build_crossexam_debate (base = 0) and the Lemma 4.1
// compiler.
DebateSystem build_crossexam_layered(std::shared_ptr<const Circuit> c, int n, int base,
                                     std::shared_ptr<const ProverStrategy> prefix0,
                                     std::shared_ptr<const ProverStrategy> prefix1);

}  // namespace dqc
