// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <set>

#include "dqc/boolfn.hpp"
#include "dqc/common.hpp"
#include "dqc/decision_tree.hpp"

namespace dqc {

// Concatenated index space the verifier probes: positions 0..n-1 are
// x_1..x_n, position n+2(j-1) is alpha_j and n+2(j-1)+1 is beta_j.
struct IndexSpace {
  int n = 0;
  int k = 0;

  int total() const { return n + 2 * k; }
  int x_pos(int i) const { return i - 1; }           // 1-based variable
  int alpha_pos(int j) const { return n + 2 * (j - 1); }
  int beta_pos(int j) const { return n + 2 * (j - 1) + 1; }

  bool is_x(int pos) const { return pos < n; }
  bool is_alpha(int pos) const { return pos >= n && (pos - n) % 2 == 0; }
  int round_of(int pos) const { return (pos - n) / 2 + 1; }

  bool operator==(const IndexSpace&) const = default;
};

// Transcript bits in play order: alpha_1, beta_1, .., alpha_k, beta_k.
struct Transcript {
  Bits bits;

  int rounds() const { return static_cast<int>(bits.size()) / 2; }
  uint8_t alpha(int j) const { return bits[2 * (j - 1)]; }
  uint8_t beta(int j) const { return bits[2 * (j - 1) + 1]; }

  auto operator<=>(const Transcript&) const = default;
};

// Concatenation of x and a transcript in index-space order.
Bits concat_input(std::span<const uint8_t> x, const Transcript& t);

struct IndexedBit {
  int index;
  uint8_t bit;
};

struct VerifierAction {
  bool is_verdict;
  int index;       // next probe when !is_verdict
  uint8_t verdict;  // when is_verdict

  static VerifierAction query(int idx) { return {false, idx, 0}; }
  static VerifierAction decide(uint8_t v) { return {true, -1, v}; }
};

// Adaptive query machine over the index space. Implementations must be
// deterministic in the answer history, never probe one index twice on a
// path, and never exceed ell() probes before a verdict. These contracts are
// enforced by full path exploration, not sampling.
class Verifier {
 public:
  virtual ~Verifier() = default;
  virtual IndexSpace space() const = 0;
  virtual int ell() const = 0;
  virtual VerifierAction act(std::span<const IndexedBit> history) const = 0;
};

// Deterministic prover strategy. Prover 0 emits alpha_r with |history| ==
// 2(r-1); Prover 1 emits beta_r with |history| == 2r-1. history holds every
// bit exchanged so far in play order.
class ProverStrategy {
 public:
  virtual ~ProverStrategy() = default;
  virtual uint8_t next_bit(std::span<const uint8_t> x, std::span<const uint8_t> history) const = 0;
};

struct DebateSystem {
  int n = 0;
  int k = 0;
  int ell_bound = 0;
  std::shared_ptr<const ProverStrategy> strategy0;
  std::shared_ptr<const ProverStrategy> strategy1;
  std::shared_ptr<const Verifier> verifier;
  std::string provenance;
  // Recorded index permutation for transformed systems: entry i is the
  // position in the source system's index space, empty when untransformed.
  std::vector<int> index_map;

  IndexSpace space() const { return IndexSpace{n, k}; }
};

struct RunResult {
  Transcript transcript;
  uint8_t verdict;
  std::vector<int> probes;
};

// Supplies the dishonest side's bit each round; sees all bits so far.
using BitChooser = std::function<std::optional<uint8_t>(std::span<const uint8_t> history)>;

// Verdict and probe trace from the verifier on a fixed (x, transcript).
RunResult run_verifier(const Verifier& v, std::span<const uint8_t> x, const Transcript& t);

// The fixed function V computed by the verifier (paper sec. 2.1 item 1).
uint8_t verifier_value(const Verifier& v, std::span<const uint8_t> x, const Transcript& t);

// One debate: the honest side plays its strategy, the adversary's bits come
// from the chooser. adversary_role 0 means Prover 0 is dishonest.
RunResult run_debate(const DebateSystem& sys, std::span<const uint8_t> x, int adversary_role,
                     const BitChooser& adversary_bits);

struct Counterexample {
  Bits x;
  int adversary_role;
  Bits adversary_bits;
  Transcript transcript;
  uint8_t verdict;
};

struct ValidityReport {
  bool valid = false;
  int max_probes_observed = 0;
  std::optional<Counterexample> counterexample;
  uint64_t leaf_evals = 0;
};

// Exhaustive alternating-quantifier check: for every x, every adaptive
// choice of the dishonest side's k bits must leave the verdict at f(x).
// Budget counts leaf evaluations (2^n * 2^k required).
ValidityReport check_validity(const DebateSystem& sys, const BoolFn& f, uint64_t budget);

struct GameValueReport {
  bool all_agree = false;
  std::vector<uint32_t> disagreements;  // x indices where minimax value != claim
  Bits values;                          // minimax value per x index
};

// Reconstructs f from V alone: value(x) = AND over alpha, OR over beta,
// alternating, of V(x, transcript); reports agreement with the claim.
GameValueReport game_value(const Verifier& v, const BoolFn& claim, uint64_t budget);

struct ExploreResult {
  std::set<int> queried;  // union of probed indices over every answer path
  int max_probes = 0;
  uint64_t paths = 0;
};

// Walks both answers of every probe; also enforces the verifier contracts
// (ell bound, no repeated index on a path).
ExploreResult explore_verifier(const Verifier& v, uint64_t budget = pow2(25));

// queried_variable_set of the paper's Lemma 2.1 proof; asserts |S| <= 2^ell.
std::set<int> queried_variable_set(const Verifier& v, uint64_t budget = pow2(25));

// Flattens the verifier into an explicit decision tree over its index space.
DecisionTree verifier_to_tree(const Verifier& v, uint64_t budget = pow2(22));

// Every (x index, transcript) reachable by an honest prover against an
// arbitrary opponent, deduplicated, ordered by (x, transcript bits).
std::vector<std::pair<uint32_t, Transcript>> enumerate_valid_pairs(const DebateSystem& sys,
                                                                   uint64_t budget);

}  // namespace dqc
