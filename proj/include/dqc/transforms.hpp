// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>

#include "dqc/circuit.hpp"
#include "dqc/debate.hpp"

namespace dqc {

// Flattened verifier behavior: answer prefixes to next probe index (original
// index, so replay reproduces probe traces bit-for-bit), full answer strings
// to verdicts, and the redaction map for the retained transcript positions.
// Keys are '0'/'1' strings; the empty prefix serializes as '-'.
struct AdviceTable {
  IndexSpace space;
  int ell = 0;
  std::map<std::string, int> next;
  std::map<std::string, uint8_t> verdict;
  std::vector<std::pair<int, int>> redacted;  // (original transcript index, redacted position)

  size_t rows() const { return next.size() + verdict.size(); }
  // Total payload bits across all rows (index and verdict fields).
  size_t payload_bits() const;

  std::string serialize() const;
  static AdviceTable parse(const std::string& text);
};

// Inserts never-probed dummy rounds at the given 1-based positions of the
// new round numbering (test fixture for Lemma 2.1; both provers emit 0 there
// and the verifier never probes them).
DebateSystem pad_rounds(const DebateSystem& sys, const std::vector<int>& dummy_positions);

struct CompressResult {
  DebateSystem system;
  std::vector<int> removed_rounds;  // original 1-based round numbers, in removal order
  size_t queried_set_size = 0;      // |S| of the compressed system
  size_t queried_transcript_size = 0;
};

// Lemma 2.1: repeatedly deletes the smallest round neither of whose bits is
// in the verifier's queried set; each honest side fixes the unseen opposing
// bit of a deleted round to 0 and replays its old strategy. When f is given
// the result is re-verified exhaustively (failure is an internal error: the
// lemma guarantees validity).
CompressResult compress_rounds(const DebateSystem& sys, const BoolFn* f, uint64_t budget);

struct CompileResult {
  DebateSystem system;
  int m = 0;  // verifier-circuit size
  int b = 0;  // challenge width
  uint64_t pairs_checked = 0;
};

// Lemma 4.1: checks cv == V on every reachable (x, transcript), then wraps
// the debate in a cross-examination of cv. Probe bound ceil(log2 m) + 3.
CompileResult crossexam_compile(const DebateSystem& sys, std::shared_ptr<const Circuit> cv,
                                uint64_t budget);

// Lemma 4.4 direction: flatten the verifier into a lookup table by full path
// exploration. Row count is at most 2^(ell+1) - 1.
AdviceTable extract_advice(const DebateSystem& sys, uint64_t budget = pow2(25));
AdviceTable extract_advice(const Verifier& v, uint64_t budget = pow2(25));

// Replays the table on (x, transcript); verdict and probe sequence match the
// source verifier exactly. Missing entries mean a corrupted table.
std::pair<uint8_t, std::vector<int>> simulate_with_advice(const AdviceTable& t,
                                                          std::span<const uint8_t> x,
                                                          const Transcript& transcript);

}  // namespace dqc
