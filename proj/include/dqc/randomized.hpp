// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numeric>

#include "dqc/circuit.hpp"
#include "dqc/debate.hpp"
#include "dqc/transforms.hpp"

namespace dqc {

// Exact rational arithmetic for error probabilities and tree weights.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);
  static Rational from_string(const std::string& s);  // "p/q" or "p"

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  auto operator<=>(const Rational& o) const {
    return static_cast<__int128>(num) * o.den <=> static_cast<__int128>(o.num) * den;
  }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
};

// A distribution over deterministic decision trees on one index space; the
// randomized q-query verifier of the paper's section 5.
struct RandomizedVerifier {
  std::vector<std::pair<DecisionTree, Rational>> trees;

  int q() const;           // max tree depth
  int space_size() const;  // shared index space
  void validate() const;   // positive weights summing to 1, one space

  std::string serialize() const;
  static RandomizedVerifier parse(const std::string& text);
};

// The {exact, exact, constant-0} uniform mixture over a system's flattened
// verifier; measured error is exactly 1/3 on valid pairs with V = 1.
RandomizedVerifier exact_mix_verifier(const DebateSystem& sys);

struct RvErrorReport {
  Rational max_error;        // worst weight of disagreeing trees over valid pairs
  uint64_t pairs = 0;        // number of distinct valid (x, transcript) pairs
  uint64_t worst_pair = 0;   // position in the enumeration order
};

// Error of the randomized verifier against V over every valid (x, T).
RvErrorReport rv_error(const RandomizedVerifier& rv, const DebateSystem& sys, const BoolFn& f,
                       uint64_t budget);

// Yao atoms: for each variable i the witness pair shares one transcript T(i)
// built by interleaving honest Prover 0 on w_i with honest Prover 1 on
// w_tilde_i; weights are uniform 1/(2n) with multiplicity.
struct HardDistribution {
  struct Atom {
    Bits x;
    Transcript transcript;
    uint8_t truth;      // V on this atom, asserted at construction
    int witness_index;  // the i of the pair
  };
  IndexSpace space;
  std::vector<Atom> atoms;  // 2n atoms, pairs adjacent: (w_i, 0) then (w_tilde_i, 1)

  Rational atom_weight() const { return Rational(1, static_cast<long long>(atoms.size())); }
};

HardDistribution build_yao_distribution(const DebateSystem& sys, const BoolFn& f);

struct PairingResult {
  Rational measured_error;
  Rational certified_lower_bound;  // forced pairs / 2n
  int forced_pairs = 0;
  int distinct_x_probed = 0;  // distinct x positions appearing anywhere in the tree
};

// The pairing argument of Theorem 5.1: any pair whose witness position the
// tree never probes on its run is forced into one error; measured error is
// always at least the certified bound.
PairingResult pairing_error_bound(const DecisionTree& tree, const HardDistribution& d);

struct NewmanResult {
  std::shared_ptr<Circuit> cv;   // majority-of-trees verifier circuit
  DebateSystem system;           // compiled debate
  int t = 0;                     // sampled tree count 12(2k+n)
  int t_odd = 0;                 // majority arity
  int attempts = 0;              // sampling rounds used (1 = first try)
  int q = 0;
  int m = 0;                     // size of cv
  int per_tree_max_size = 0;
  int final_probe_bound = 0;     // ceil(log2 m) + 3
  int c_impl = 0;                // final bound - q - ceil(log2(2k+n))
  uint64_t pairs_checked = 0;
};

// Theorem 5.2: sample 12(2k+n) trees from rv, verify the majority verdict
// equals V on every valid pair (resampling up to 10 times), convert to a
// majority circuit and compile by cross-examination.
NewmanResult newman_derandomize(const RandomizedVerifier& rv, const DebateSystem& sys,
                                const BoolFn& f, uint64_t seed, uint64_t budget,
                                int max_attempts = 10);

}  // namespace dqc
