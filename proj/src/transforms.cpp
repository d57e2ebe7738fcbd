// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#include "dqc/transforms.hpp"

#include <algorithm>
#include <sstream>

#include "dqc/protocols.hpp"

namespace dqc {

namespace {

// ---------------------------------------------------------------------------
// Round padding

struct PadMap {
  int old_k = 0;
  int new_k = 0;
  int n = 0;
  std::vector<int> new_round_to_old;  // 1-based rounds; 0 marks a dummy round
  std::vector<int> old_round_to_new;

  IndexSpace old_space() const { return IndexSpace{n, old_k}; }
  IndexSpace new_space() const { return IndexSpace{n, new_k}; }

  int old_pos_to_new(int pos) const {
    if (pos < n) return pos;
    int j = (pos - n) / 2 + 1;
    int side = (pos - n) % 2;
    return n + 2 * (old_round_to_new[j] - 1) + side;
  }
  int new_pos_to_old(int pos) const {
    if (pos < n) return pos;
    int j = (pos - n) / 2 + 1;
    int side = (pos - n) % 2;
    int oj = new_round_to_old[j];
    if (oj == 0) throw Error(ErrorKind::Internal, "probe of a dummy round position");
    return n + 2 * (oj - 1) + side;
  }
};

class PaddedStrategy final : public ProverStrategy {
 public:
  PaddedStrategy(std::shared_ptr<const ProverStrategy> inner, std::shared_ptr<const PadMap> map,
                 int role)
      : inner_(std::move(inner)), map_(std::move(map)), role_(role) {}

  uint8_t next_bit(std::span<const uint8_t> x, std::span<const uint8_t> history) const override {
    int round = role_ == 0 ? static_cast<int>(history.size()) / 2 + 1
                           : static_cast<int>(history.size() + 1) / 2;
    if (map_->new_round_to_old[round] == 0) return 0;  // dummy round
    // Project the history onto real rounds.
    Bits old_history;
    old_history.reserve(history.size());
    for (size_t p = 0; p < history.size(); ++p) {
      int r = static_cast<int>(p) / 2 + 1;
      if (map_->new_round_to_old[r] != 0) old_history.push_back(history[p]);
    }
    return inner_->next_bit(x, old_history);
  }

 private:
  std::shared_ptr<const ProverStrategy> inner_;
  std::shared_ptr<const PadMap> map_;
  int role_;
};

class PaddedVerifier final : public Verifier {
 public:
  PaddedVerifier(std::shared_ptr<const Verifier> inner, std::shared_ptr<const PadMap> map)
      : inner_(std::move(inner)), map_(std::move(map)) {}

  IndexSpace space() const override { return map_->new_space(); }
  int ell() const override { return inner_->ell(); }

  VerifierAction act(std::span<const IndexedBit> history) const override {
    std::vector<IndexedBit> old_history;
    old_history.reserve(history.size());
    for (const IndexedBit& ib : history)
      old_history.push_back(IndexedBit{map_->new_pos_to_old(ib.index), ib.bit});
    VerifierAction a = inner_->act(old_history);
    if (a.is_verdict) return a;
    return VerifierAction::query(map_->old_pos_to_new(a.index));
  }

 private:
  std::shared_ptr<const Verifier> inner_;
  std::shared_ptr<const PadMap> map_;
};

// ---------------------------------------------------------------------------
// Round removal (one round at a time)

struct RemoveMap {
  int old_k = 0;
  int removed = 0;  // 1-based old round
  int n = 0;

  int new_k() const { return old_k - 1; }
  int old_round(int new_round) const { return new_round < removed ? new_round : new_round + 1; }

  int old_pos_to_new(int pos) const {
    if (pos < n) return pos;
    int j = (pos - n) / 2 + 1;
    int side = (pos - n) % 2;
    if (j == removed) throw Error(ErrorKind::Internal, "verifier probed a removed round");
    int nj = j < removed ? j : j - 1;
    return n + 2 * (nj - 1) + side;
  }
  int new_pos_to_old(int pos) const {
    if (pos < n) return pos;
    int j = (pos - n) / 2 + 1;
    int side = (pos - n) % 2;
    return n + 2 * (old_round(j) - 1) + side;
  }
};

// The honest side simulates the removed round internally: it computes its own
// bit there with its old strategy and fixes the unseen opposing bit to 0.
class RoundRemovedStrategy final : public ProverStrategy {
 public:
  RoundRemovedStrategy(std::shared_ptr<const ProverStrategy> inner,
                       std::shared_ptr<const RemoveMap> map, int role)
      : inner_(std::move(inner)), map_(std::move(map)), role_(role) {}

  uint8_t next_bit(std::span<const uint8_t> x, std::span<const uint8_t> history) const override {
    const int i = map_->removed;
    int round = role_ == 0 ? static_cast<int>(history.size()) / 2 + 1
                           : static_cast<int>(history.size() + 1) / 2;
    if (round < i) return inner_->next_bit(x, history);
    Bits old_history(history.begin(), history.begin() + 2 * (i - 1));
    if (role_ == 0) {
      old_history.push_back(inner_->next_bit(x, old_history));  // own alpha_i
      old_history.push_back(0);                                 // assumed beta_i
    } else {
      old_history.push_back(0);  // assumed alpha_i
      old_history.push_back(inner_->next_bit(x, old_history));  // own beta_i
    }
    old_history.insert(old_history.end(), history.begin() + 2 * (i - 1), history.end());
    return inner_->next_bit(x, old_history);
  }

 private:
  std::shared_ptr<const ProverStrategy> inner_;
  std::shared_ptr<const RemoveMap> map_;
  int role_;
};

class RoundRemovedVerifier final : public Verifier {
 public:
  RoundRemovedVerifier(std::shared_ptr<const Verifier> inner, std::shared_ptr<const RemoveMap> map)
      : inner_(std::move(inner)), map_(std::move(map)) {}

  IndexSpace space() const override { return IndexSpace{map_->n, map_->new_k()}; }
  int ell() const override { return inner_->ell(); }

  VerifierAction act(std::span<const IndexedBit> history) const override {
    std::vector<IndexedBit> old_history;
    old_history.reserve(history.size());
    for (const IndexedBit& ib : history)
      old_history.push_back(IndexedBit{map_->new_pos_to_old(ib.index), ib.bit});
    VerifierAction a = inner_->act(old_history);
    if (a.is_verdict) return a;
    return VerifierAction::query(map_->old_pos_to_new(a.index));
  }

 private:
  std::shared_ptr<const Verifier> inner_;
  std::shared_ptr<const RemoveMap> map_;
};

std::vector<int> compose_index_map(const DebateSystem& base, const std::vector<int>& new_to_base) {
  if (base.index_map.empty()) return new_to_base;
  std::vector<int> out(new_to_base.size());
  for (size_t i = 0; i < new_to_base.size(); ++i) out[i] = base.index_map[new_to_base[i]];
  return out;
}

DebateSystem remove_round(const DebateSystem& sys, int round) {
  auto map = std::make_shared<RemoveMap>();
  map->old_k = sys.k;
  map->removed = round;
  map->n = sys.n;
  DebateSystem out;
  out.n = sys.n;
  out.k = sys.k - 1;
  out.ell_bound = sys.ell_bound;
  out.strategy0 = std::make_shared<RoundRemovedStrategy>(sys.strategy0, map, 0);
  out.strategy1 = std::make_shared<RoundRemovedStrategy>(sys.strategy1, map, 1);
  out.verifier = std::make_shared<RoundRemovedVerifier>(sys.verifier, map);
  out.provenance = sys.provenance;
  std::vector<int> new_to_old(out.space().total());
  for (int p = 0; p < out.space().total(); ++p) new_to_old[p] = map->new_pos_to_old(p);
  out.index_map = compose_index_map(sys, new_to_old);
  return out;
}

}  // namespace

DebateSystem pad_rounds(const DebateSystem& sys, const std::vector<int>& dummy_positions) {
  const int new_k = sys.k + static_cast<int>(dummy_positions.size());
  auto map = std::make_shared<PadMap>();
  map->old_k = sys.k;
  map->new_k = new_k;
  map->n = sys.n;
  map->new_round_to_old.assign(new_k + 1, 0);
  map->old_round_to_new.assign(sys.k + 1, 0);
  for (int pos : dummy_positions) {
    if (pos < 1 || pos > new_k)
      throw Error(ErrorKind::IndexRange, "dummy round position out of range");
    if (map->new_round_to_old[pos] != 0)
      throw Error(ErrorKind::IndexRange, "duplicate dummy round position");
    map->new_round_to_old[pos] = -1;  // mark, rewritten below
  }
  int old_round = 1;
  for (int r = 1; r <= new_k; ++r) {
    if (map->new_round_to_old[r] == -1) {
      map->new_round_to_old[r] = 0;
      continue;
    }
    map->new_round_to_old[r] = old_round;
    map->old_round_to_new[old_round] = r;
    ++old_round;
  }
  if (old_round != sys.k + 1) throw Error(ErrorKind::Internal, "pad map construction failed");

  DebateSystem out;
  out.n = sys.n;
  out.k = new_k;
  out.ell_bound = sys.ell_bound;
  out.strategy0 = std::make_shared<PaddedStrategy>(sys.strategy0, map, 0);
  out.strategy1 = std::make_shared<PaddedStrategy>(sys.strategy1, map, 1);
  out.verifier = std::make_shared<PaddedVerifier>(sys.verifier, map);
  out.provenance = sys.provenance;
  return out;
}

CompressResult compress_rounds(const DebateSystem& sys, const BoolFn* f, uint64_t budget) {
  CompressResult res;
  res.system = sys;
  // Track original round numbers through successive removals.
  std::vector<int> original_round(sys.k + 1);
  for (int r = 1; r <= sys.k; ++r) original_round[r] = r;

  for (;;) {
    std::set<int> s = queried_variable_set(*res.system.verifier, budget);
    const IndexSpace sp = res.system.space();
    int target = 0;
    for (int r = 1; r <= res.system.k; ++r) {
      if (!s.count(sp.alpha_pos(r)) && !s.count(sp.beta_pos(r))) {
        target = r;
        break;
      }
    }
    if (target == 0) {
      res.queried_set_size = s.size();
      res.queried_transcript_size = 0;
      for (int idx : s)
        if (idx >= sp.n) ++res.queried_transcript_size;
      break;
    }
    res.removed_rounds.push_back(original_round[target]);
    original_round.erase(original_round.begin() + target);
    res.system = remove_round(res.system, target);
  }

  if (static_cast<uint64_t>(2 * res.system.k) > 2 * pow2(res.system.ell_bound))
    throw Error(ErrorKind::Internal, "compressed transcript exceeds the 2^(ell+1) bound");

  if (f != nullptr) {
    ValidityReport check = check_validity(res.system, *f, budget);
    if (!check.valid)
      throw Error(ErrorKind::Internal,
                  "compressed system failed its validity re-check (Lemma 2.1 violated)");
  }
  return res;
}

CompileResult crossexam_compile(const DebateSystem& sys, std::shared_ptr<const Circuit> cv,
                                uint64_t budget) {
  if (!cv) throw Error(ErrorKind::Precondition, "crossexam_compile needs a verifier circuit");
  const int want_inputs = sys.n + 2 * sys.k;
  if (cv->n_inputs() != want_inputs)
    throw Error(ErrorKind::Precondition, "verifier circuit must have " +
                                             std::to_string(want_inputs) + " inputs, has " +
                                             std::to_string(cv->n_inputs()));
  // The compile hypothesis: cv computes V on every reachable (x, transcript).
  auto pairs = enumerate_valid_pairs(sys, budget);
  for (const auto& [xi, t] : pairs) {
    Bits x = bits_of_index(xi, sys.n);
    Bits all = concat_input(x, t);
    uint8_t circuit_value = cv->eval(all);
    uint8_t v = verifier_value(*sys.verifier, x, t);
    if (circuit_value != v)
      throw Error(ErrorKind::Precondition,
                  "verifier circuit disagrees with V on x=" + bits_to_string(x) +
                      " transcript=" + bits_to_string(t.bits) + " (circuit " +
                      std::to_string(circuit_value) + ", V " + std::to_string(v) + ")");
  }

  CompileResult res;
  res.pairs_checked = pairs.size();
  res.m = cv->size();
  res.b = crossexam_challenge_width(res.m);
  res.system = build_crossexam_layered(cv, sys.n, sys.k, sys.strategy0, sys.strategy1);
  res.system.provenance = sys.provenance.empty() ? "compile" : sys.provenance + "+compile";
  return res;
}

// ---------------------------------------------------------------------------
// Advice tables

size_t AdviceTable::payload_bits() const {
  size_t index_bits = static_cast<size_t>(ceil_log2(static_cast<uint64_t>(space.total())));
  return next.size() * index_bits + verdict.size();
}

std::string AdviceTable::serialize() const {
  std::ostringstream out;
  out << "advice n " << space.n << " k " << space.k << " ell " << ell << "\n";
  auto key = [](const std::string& u) { return u.empty() ? std::string("-") : u; };
  for (const auto& [u, idx] : next) out << "next " << key(u) << " " << idx << "\n";
  for (const auto& [u, bit] : verdict) out << "verdict " << key(u) << " " << int(bit) << "\n";
  for (const auto& [orig, renum] : redacted) out << "redacted " << orig << " " << renum << "\n";
  return out.str();
}

AdviceTable AdviceTable::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  AdviceTable t;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    auto fail = [&](const std::string& msg) {
      return Error(ErrorKind::Parse, "advice line " + std::to_string(lineno) + ": " + msg);
    };
    if (kw == "advice") {
      std::string nk, kk, ek;
      if (!(ls >> nk >> t.space.n >> kk >> t.space.k >> ek >> t.ell) || nk != "n" || kk != "k" ||
          ek != "ell")
        throw fail("header must be 'advice n <n> k <k> ell <ell>'");
      header = true;
    } else if (kw == "next") {
      std::string u;
      int idx;
      if (!(ls >> u >> idx)) throw fail("next <u-bits> <index>");
      t.next[u == "-" ? "" : u] = idx;
    } else if (kw == "verdict") {
      std::string u;
      int bit;
      if (!(ls >> u >> bit) || (bit != 0 && bit != 1)) throw fail("verdict <u-bits> <bit>");
      t.verdict[u == "-" ? "" : u] = static_cast<uint8_t>(bit);
    } else if (kw == "redacted") {
      int orig, renum;
      if (!(ls >> orig >> renum)) throw fail("redacted <orig-index> <new-index>");
      t.redacted.emplace_back(orig, renum);
    } else {
      throw fail("unknown record '" + kw + "'");
    }
  }
  if (!header) throw Error(ErrorKind::Parse, "advice file missing header line");
  return t;
}

AdviceTable extract_advice(const Verifier& v, uint64_t budget) {
  AdviceTable t;
  t.space = v.space();
  t.ell = v.ell();
  std::vector<IndexedBit> history;
  uint64_t visited = 0;
  auto prefix_of = [&]() {
    std::string u;
    u.reserve(history.size());
    for (const IndexedBit& ib : history) u.push_back(ib.bit ? '1' : '0');
    return u;
  };
  auto rec = [&](auto&& self) -> void {
    if (++visited > budget)
      throw Error(ErrorKind::Budget, "advice extraction exceeded budget " + std::to_string(budget));
    VerifierAction a = v.act(history);
    if (a.is_verdict) {
      t.verdict[prefix_of()] = a.verdict;
      return;
    }
    t.next[prefix_of()] = a.index;
    for (uint8_t b = 0; b <= 1; ++b) {
      history.push_back(IndexedBit{a.index, b});
      self(self);
      history.pop_back();
    }
  };
  rec(rec);
  if (t.rows() > pow2(t.ell + 1) - 1)
    throw Error(ErrorKind::Internal, "advice table exceeds 2^(ell+1)-1 rows");

  std::set<int> s;
  for (const auto& [u, idx] : t.next)
    if (idx >= t.space.n) s.insert(idx);
  int renum = 0;
  for (int idx : s) t.redacted.emplace_back(idx, renum++);
  return t;
}

AdviceTable extract_advice(const DebateSystem& sys, uint64_t budget) {
  return extract_advice(*sys.verifier, budget);
}

std::pair<uint8_t, std::vector<int>> simulate_with_advice(const AdviceTable& t,
                                                          std::span<const uint8_t> x,
                                                          const Transcript& transcript) {
  if (static_cast<int>(x.size()) != t.space.n ||
      static_cast<int>(transcript.bits.size()) != 2 * t.space.k)
    throw Error(ErrorKind::InputShape, "advice simulation input shape mismatch");
  Bits all = concat_input(x, transcript);
  std::string u;
  std::vector<int> probes;
  for (;;) {
    auto vd = t.verdict.find(u);
    if (vd != t.verdict.end()) return {vd->second, probes};
    auto nx = t.next.find(u);
    if (nx == t.next.end())
      throw Error(ErrorKind::CorruptTable, "advice table has no entry for prefix '" +
                                               (u.empty() ? std::string("-") : u) + "'");
    int idx = nx->second;
    if (idx < 0 || idx >= t.space.total())
      throw Error(ErrorKind::CorruptTable, "advice table points outside the index space");
    probes.push_back(idx);
    u.push_back(all[idx] ? '1' : '0');
    if (static_cast<int>(u.size()) > t.ell)
      throw Error(ErrorKind::CorruptTable, "advice table loops past the query bound");
  }
}

}  // namespace dqc
