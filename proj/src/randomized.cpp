// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#include "dqc/randomized.hpp"

#include <algorithm>
#include <sstream>

#include "dqc/protocols.hpp"

namespace dqc {

// ---------------------------------------------------------------------------
// Rational

namespace {

long long checked_ll(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(ErrorKind::Budget, std::string("rational overflow in ") + what);
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw Error(ErrorKind::InputShape, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s), 1);
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
  }
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
  __int128 d = static_cast<__int128>(den) * o.den;
  return Rational(checked_ll(n, "+"), checked_ll(d, "+"));
}

Rational Rational::operator-(const Rational& o) const {
  return *this + Rational(-o.num, o.den);
}

Rational Rational::operator*(const Rational& o) const {
  __int128 n = static_cast<__int128>(num) * o.num;
  __int128 d = static_cast<__int128>(den) * o.den;
  return Rational(checked_ll(n, "*"), checked_ll(d, "*"));
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

// ---------------------------------------------------------------------------
// RandomizedVerifier

int RandomizedVerifier::q() const {
  int q = 0;
  for (const auto& [tree, w] : trees) q = std::max(q, tree.depth());
  return q;
}

int RandomizedVerifier::space_size() const {
  if (trees.empty()) throw Error(ErrorKind::InputShape, "randomized verifier has no trees");
  return trees.front().first.space_size();
}

void RandomizedVerifier::validate() const {
  if (trees.empty()) throw Error(ErrorKind::InputShape, "randomized verifier has no trees");
  Rational sum(0, 1);
  for (const auto& [tree, w] : trees) {
    if (w.num <= 0) throw Error(ErrorKind::InputShape, "tree weights must be positive");
    if (tree.space_size() != space_size())
      throw Error(ErrorKind::InputShape, "all trees must share one index space");
    sum = sum + w;
  }
  if (!(sum == Rational(1, 1)))
    throw Error(ErrorKind::InputShape, "tree weights must sum to 1, got " + sum.to_string());
}

std::string RandomizedVerifier::serialize() const {
  std::ostringstream out;
  out << "rverifier space " << space_size() << "\n";
  for (const auto& [tree, w] : trees) {
    out << "tree " << w.to_string() << "\n";
    out << tree.serialize();
  }
  return out.str();
}

RandomizedVerifier RandomizedVerifier::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int space = 0;
  RandomizedVerifier rv;
  std::string block;
  Rational weight(1, 1);
  bool in_tree = false;
  auto flush = [&]() {
    if (!in_tree) return;
    rv.trees.emplace_back(DecisionTree::parse(block, space), weight);
    block.clear();
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "rverifier") {
      std::string skw;
      if (!(ls >> skw >> space) || skw != "space" || space < 1)
        throw Error(ErrorKind::Parse, "rverifier header must be 'rverifier space <size>'");
    } else if (kw == "tree") {
      if (space == 0) throw Error(ErrorKind::Parse, "rverifier header must precede trees");
      flush();
      std::string w;
      if (!(ls >> w)) throw Error(ErrorKind::Parse, "tree line needs a weight");
      weight = Rational::from_string(w);
      in_tree = true;
    } else if (kw == "node" || kw == "leaf") {
      if (!in_tree) throw Error(ErrorKind::Parse, "tree records before any tree line");
      block += line + "\n";
    } else {
      throw Error(ErrorKind::Parse, "unknown rverifier record '" + kw + "'");
    }
  }
  flush();
  rv.validate();
  return rv;
}

RandomizedVerifier exact_mix_verifier(const DebateSystem& sys) {
  DecisionTree exact = verifier_to_tree(*sys.verifier);
  RandomizedVerifier rv;
  rv.trees.emplace_back(exact, Rational(1, 3));
  rv.trees.emplace_back(exact, Rational(1, 3));
  rv.trees.emplace_back(DecisionTree::constant(sys.space().total(), 0), Rational(1, 3));
  rv.validate();
  return rv;
}

// ---------------------------------------------------------------------------
// Error and the hard distribution

RvErrorReport rv_error(const RandomizedVerifier& rv, const DebateSystem& sys, const BoolFn& f,
                       uint64_t budget) {
  rv.validate();
  if (f.n() != sys.n) throw Error(ErrorKind::InputShape, "function arity mismatch");
  if (rv.space_size() != sys.space().total())
    throw Error(ErrorKind::InputShape, "randomized verifier index space mismatch");
  auto pairs = enumerate_valid_pairs(sys, budget);
  RvErrorReport rep;
  rep.pairs = pairs.size();
  rep.max_error = Rational(0, 1);
  for (uint64_t p = 0; p < pairs.size(); ++p) {
    Bits x = bits_of_index(pairs[p].first, sys.n);
    Bits all = concat_input(x, pairs[p].second);
    uint8_t truth = verifier_value(*sys.verifier, x, pairs[p].second);
    Rational err(0, 1);
    for (const auto& [tree, w] : rv.trees)
      if (tree.eval(all) != truth) err = err + w;
    if (rep.max_error < err) {
      rep.max_error = err;
      rep.worst_pair = p;
    }
  }
  return rep;
}

HardDistribution build_yao_distribution(const DebateSystem& sys, const BoolFn& f) {
  if (f.n() != sys.n) throw Error(ErrorKind::InputShape, "function arity mismatch");
  if (!f.depends_on_all())
    throw Error(ErrorKind::Precondition,
                "hard distribution needs a function depending on all variables");
  HardDistribution d;
  d.space = sys.space();
  for (int i = 1; i <= sys.n; ++i) {
    WitnessPair wp = f.witness_pair(i);
    // Interleave the two honest strategies on one shared transcript: Prover 0
    // plays on w_i, Prover 1 plays on w_tilde_i.
    Bits history;
    for (int r = 1; r <= sys.k; ++r) {
      history.push_back(sys.strategy0->next_bit(wp.w, history) & 1);
      history.push_back(sys.strategy1->next_bit(wp.w_tilde, history) & 1);
    }
    Transcript t{history};
    uint8_t v0 = verifier_value(*sys.verifier, wp.w, t);
    uint8_t v1 = verifier_value(*sys.verifier, wp.w_tilde, t);
    if (v0 != 0 || v1 != 1)
      throw Error(ErrorKind::Internal,
                  "shared transcript has wrong ground truths at witness " + std::to_string(i) +
                      " (V(w)=" + std::to_string(v0) + ", V(w~)=" + std::to_string(v1) + ")");
    d.atoms.push_back(HardDistribution::Atom{wp.w, t, 0, i});
    d.atoms.push_back(HardDistribution::Atom{wp.w_tilde, t, 1, i});
  }
  return d;
}

PairingResult pairing_error_bound(const DecisionTree& tree, const HardDistribution& d) {
  if (tree.space_size() != d.space.total())
    throw Error(ErrorKind::InputShape, "tree index space does not match the distribution");
  PairingResult res;
  const int pair_count = static_cast<int>(d.atoms.size()) / 2;
  int errors = 0;
  for (const auto& atom : d.atoms) {
    Bits all = concat_input(atom.x, atom.transcript);
    if (tree.eval(all) != atom.truth) ++errors;
  }
  for (int p = 0; p < pair_count; ++p) {
    const auto& a0 = d.atoms[2 * p];
    const auto& a1 = d.atoms[2 * p + 1];
    Bits all0 = concat_input(a0.x, a0.transcript);
    std::vector<int> probes = tree.probes_on(all0);
    int witness_pos = d.space.x_pos(a0.witness_index);
    if (std::find(probes.begin(), probes.end(), witness_pos) != probes.end()) continue;
    // Unprobed witness position: both runs must walk the same path.
    Bits all1 = concat_input(a1.x, a1.transcript);
    if (tree.probes_on(all1) != probes || tree.eval(all1) != tree.eval(all0))
      throw Error(ErrorKind::Internal, "pair with unprobed witness split at distinct leaves");
    ++res.forced_pairs;
  }
  res.measured_error = Rational(errors, static_cast<long long>(d.atoms.size()));
  res.certified_lower_bound = Rational(res.forced_pairs, static_cast<long long>(d.atoms.size()) / 2)
                              * Rational(1, 2);
  for (int idx : tree.all_indices())
    if (d.space.is_x(idx)) ++res.distinct_x_probed;
  if (res.measured_error < res.certified_lower_bound)
    throw Error(ErrorKind::Internal, "measured error fell below the certified pairing bound");
  return res;
}

// ---------------------------------------------------------------------------
// Newman derandomization

NewmanResult newman_derandomize(const RandomizedVerifier& rv, const DebateSystem& sys,
                                const BoolFn& f, uint64_t seed, uint64_t budget,
                                int max_attempts) {
  RvErrorReport err = rv_error(rv, sys, f, budget);
  if (Rational(1, 3) < err.max_error)
    throw Error(ErrorKind::Precondition,
                "randomized verifier error " + err.max_error.to_string() + " exceeds 1/3");

  NewmanResult res;
  res.q = rv.q();
  res.t = 12 * (2 * sys.k + sys.n);
  res.t_odd = res.t % 2 == 0 ? res.t + 1 : res.t;

  // Common-denominator weights for exact seeded sampling.
  uint64_t denom = 1;
  for (const auto& [tree, w] : rv.trees) {
    uint64_t d = static_cast<uint64_t>(w.den);
    uint64_t g = std::gcd(denom, d);
    if (denom / g > UINT64_MAX / d)
      throw Error(ErrorKind::Budget, "tree weight denominators overflow the sampler");
    denom = denom / g * d;
  }
  std::vector<uint64_t> cumulative;
  uint64_t acc = 0;
  for (const auto& [tree, w] : rv.trees) {
    acc += static_cast<uint64_t>(w.num) * (denom / static_cast<uint64_t>(w.den));
    cumulative.push_back(acc);
  }

  auto pairs = enumerate_valid_pairs(sys, budget);
  std::vector<Bits> inputs;
  Bits truths;
  for (const auto& [xi, t] : pairs) {
    Bits x = bits_of_index(xi, sys.n);
    inputs.push_back(concat_input(x, t));
    truths.push_back(verifier_value(*sys.verifier, x, t));
  }

  Rng rng(seed);
  std::vector<int> sampled;
  bool ok = false;
  for (res.attempts = 1; res.attempts <= max_attempts; ++res.attempts) {
    sampled.clear();
    for (int s = 0; s < res.t; ++s) {
      uint64_t r = rng.below(denom);
      int pick = static_cast<int>(
          std::upper_bound(cumulative.begin(), cumulative.end(), r) - cumulative.begin());
      sampled.push_back(pick);
    }
    // Majority verdict on every valid pair; an even t gives the last sampled
    // tree a double vote, matching the circuit built below.
    ok = true;
    for (size_t p = 0; p < inputs.size() && ok; ++p) {
      int votes = 0;
      for (int s : sampled) votes += rv.trees[s].first.eval(inputs[p]);
      if (res.t % 2 == 0) votes += rv.trees[sampled.back()].first.eval(inputs[p]);
      uint8_t major = votes >= (res.t_odd + 1) / 2 ? 1 : 0;
      ok = (major == truths[p]);
    }
    if (ok) break;
  }
  if (!ok)
    throw Error(ErrorKind::Construction,
                "majority of sampled trees failed to match V after " +
                    std::to_string(max_attempts) + " attempts (t=" + std::to_string(res.t) +
                    ", pairs=" + std::to_string(pairs.size()) + ")");

  // Verifier circuit: every sampled tree as a multiplexer circuit feeding one
  // majority vote. Structural hashing shares identical trees.
  const int space = sys.space().total();
  CircuitBuilder b(space);
  std::vector<CircuitBuilder::Wire> space_wires;
  for (int i = 1; i <= space; ++i) space_wires.push_back(b.input(i));
  std::vector<CircuitBuilder::Wire> votes;
  for (int s : sampled) {
    Circuit tree_circuit = decision_tree_to_circuit(rv.trees[s].first);
    res.per_tree_max_size = std::max(res.per_tree_max_size, tree_circuit.size());
    votes.push_back(b.inline_circuit(tree_circuit, space_wires));
  }
  if (res.t % 2 == 0) votes.push_back(votes.back());
  Circuit maj = majority_circuit(res.t_odd);
  auto cv = std::make_shared<Circuit>(b.finish(b.inline_circuit(maj, votes)));
  res.m = cv->size();
  res.cv = cv;

  CompileResult compiled = crossexam_compile(sys, cv, budget);
  res.system = std::move(compiled.system);
  res.system.provenance = sys.provenance + "+newman";
  res.pairs_checked = compiled.pairs_checked;
  res.final_probe_bound = ceil_log2(static_cast<uint64_t>(res.m)) + 3;
  res.c_impl = res.final_probe_bound - res.q - ceil_log2(static_cast<uint64_t>(2 * sys.k + sys.n));
  return res;
}

}  // namespace dqc
