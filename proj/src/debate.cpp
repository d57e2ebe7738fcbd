// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#include "dqc/debate.hpp"

#include <algorithm>

namespace dqc {

Bits concat_input(std::span<const uint8_t> x, const Transcript& t) {
  Bits all(x.begin(), x.end());
  all.insert(all.end(), t.bits.begin(), t.bits.end());
  return all;
}

RunResult run_verifier(const Verifier& v, std::span<const uint8_t> x, const Transcript& t) {
  const IndexSpace sp = v.space();
  if (static_cast<int>(x.size()) != sp.n)
    throw Error(ErrorKind::InputShape, "verifier input x length mismatch");
  if (static_cast<int>(t.bits.size()) != 2 * sp.k)
    throw Error(ErrorKind::InputShape, "verifier transcript length mismatch");
  Bits all = concat_input(x, t);
  RunResult res;
  res.transcript = t;
  std::vector<IndexedBit> history;
  for (;;) {
    VerifierAction a = v.act(history);
    if (a.is_verdict) {
      res.verdict = a.verdict;
      break;
    }
    if (a.index < 0 || a.index >= sp.total())
      throw Error(ErrorKind::Internal, "verifier probed index outside its space");
    if (static_cast<int>(history.size()) >= v.ell())
      throw Error(ErrorKind::Internal, "verifier exceeded its declared query bound");
    res.probes.push_back(a.index);
    history.push_back(IndexedBit{a.index, all[a.index]});
  }
  return res;
}

uint8_t verifier_value(const Verifier& v, std::span<const uint8_t> x, const Transcript& t) {
  return run_verifier(v, x, t).verdict;
}

RunResult run_debate(const DebateSystem& sys, std::span<const uint8_t> x, int adversary_role,
                     const BitChooser& adversary_bits) {
  if (static_cast<int>(x.size()) != sys.n)
    throw Error(ErrorKind::InputShape, "debate input length mismatch");
  if (adversary_role != 0 && adversary_role != 1)
    throw Error(ErrorKind::InputShape, "adversary role must be 0 or 1");
  Bits history;
  history.reserve(2 * sys.k);
  for (int r = 1; r <= sys.k; ++r) {
    for (int side = 0; side <= 1; ++side) {
      uint8_t bit;
      if (side == adversary_role) {
        std::optional<uint8_t> choice = adversary_bits(history);
        if (!choice)
          throw Error(ErrorKind::InputShape,
                      "adversary bit chooser exhausted before round " + std::to_string(r));
        bit = *choice & 1;
      } else {
        const ProverStrategy& honest = side == 0 ? *sys.strategy0 : *sys.strategy1;
        bit = honest.next_bit(x, history) & 1;
      }
      history.push_back(bit);
    }
  }
  Transcript t{std::move(history)};
  RunResult res = run_verifier(*sys.verifier, x, t);
  if (static_cast<int>(res.probes.size()) > sys.ell_bound)
    throw Error(ErrorKind::Internal, "verifier probed more than the system's ell bound");
  return res;
}

namespace {

// DFS over the dishonest side's adaptive bit choices. Prefix work (honest
// strategy calls) is shared between adversary branches.
struct ValidityDfs {
  const DebateSystem& sys;
  std::span<const uint8_t> x;
  int adversary_role;
  uint8_t expected;
  Bits history;
  Bits adversary_trace;
  ValidityReport& report;

  bool descend(int round) {
    if (round > sys.k) {
      Transcript t{history};
      RunResult res = run_verifier(*sys.verifier, x, t);
      ++report.leaf_evals;
      report.max_probes_observed =
          std::max(report.max_probes_observed, static_cast<int>(res.probes.size()));
      if (res.verdict != expected) {
        report.valid = false;
        report.counterexample = Counterexample{Bits(x.begin(), x.end()), adversary_role,
                                               adversary_trace, t, res.verdict};
        return false;
      }
      return true;
    }
    // Round bits in play order; the adversary's bit enumerates both values.
    size_t mark = history.size();
    auto emit_honest = [&](int side) {
      const ProverStrategy& honest = side == 0 ? *sys.strategy0 : *sys.strategy1;
      history.push_back(honest.next_bit(x, history) & 1);
    };
    if (adversary_role == 0) {
      for (uint8_t a = 0; a <= 1; ++a) {
        history.push_back(a);
        adversary_trace.push_back(a);
        emit_honest(1);
        if (!descend(round + 1)) return false;
        history.resize(mark);
        adversary_trace.pop_back();
      }
    } else {
      emit_honest(0);
      for (uint8_t bchoice = 0; bchoice <= 1; ++bchoice) {
        history.push_back(bchoice);
        adversary_trace.push_back(bchoice);
        if (!descend(round + 1)) return false;
        history.pop_back();
        adversary_trace.pop_back();
      }
      history.resize(mark);
    }
    return true;
  }
};

}  // namespace

ValidityReport check_validity(const DebateSystem& sys, const BoolFn& f, uint64_t budget) {
  if (f.n() != sys.n)
    throw Error(ErrorKind::InputShape, "function arity does not match the debate system");
  if (sys.k >= 60 || sys.n + sys.k >= 60 ||
      (pow2(sys.n) * pow2(sys.k)) > budget)
    throw Error(ErrorKind::Budget,
                "check_validity needs 2^" + std::to_string(sys.n + sys.k) +
                    " leaf evaluations, budget is " + std::to_string(budget));
  ValidityReport report;
  report.valid = true;
  for (uint32_t xi = 0; xi < pow2(sys.n); ++xi) {
    Bits x = bits_of_index(xi, sys.n);
    // Honest side defends f(x); the other side ranges over all strategies.
    int adversary_role = f.eval_index(xi) == 1 ? 0 : 1;
    ValidityDfs dfs{sys, x, adversary_role, f.eval_index(xi), {}, {}, report};
    if (!dfs.descend(1)) break;
  }
  if (report.valid && report.max_probes_observed > sys.ell_bound)
    throw Error(ErrorKind::Internal, "observed probes exceed the declared ell bound");
  return report;
}

GameValueReport game_value(const Verifier& v, const BoolFn& claim, uint64_t budget) {
  const IndexSpace sp = v.space();
  if (claim.n() != sp.n)
    throw Error(ErrorKind::InputShape, "claim arity does not match the verifier space");
  if (sp.n + 2 * sp.k >= 60 || pow2(sp.n) * pow2(2 * sp.k) > budget)
    throw Error(ErrorKind::Budget, "game_value needs 2^" + std::to_string(sp.n + 2 * sp.k) +
                                       " verifier evaluations, budget is " + std::to_string(budget));
  GameValueReport report;
  report.all_agree = true;
  for (uint32_t xi = 0; xi < pow2(sp.n); ++xi) {
    Bits x = bits_of_index(xi, sp.n);
    Bits partial;
    // Alternating quantifiers: AND over alpha bits, OR over beta bits.
    auto minimax = [&](auto&& self, int pos) -> uint8_t {
      if (pos == 2 * sp.k) return verifier_value(v, x, Transcript{partial});
      bool is_alpha = pos % 2 == 0;
      uint8_t acc = is_alpha ? 1 : 0;
      for (uint8_t b = 0; b <= 1; ++b) {
        partial.push_back(b);
        uint8_t sub = self(self, pos + 1);
        partial.pop_back();
        acc = is_alpha ? (acc & sub) : (acc | sub);
      }
      return acc;
    };
    uint8_t value = minimax(minimax, 0);
    report.values.push_back(value);
    if (value != claim.eval_index(xi)) {
      report.all_agree = false;
      report.disagreements.push_back(xi);
    }
  }
  return report;
}

namespace {

// Shared DFS over every answer path of an adaptive verifier.
template <typename LeafFn, typename QueryFn>
void walk_verifier(const Verifier& v, uint64_t budget, LeafFn&& on_leaf, QueryFn&& on_query) {
  const int total = v.space().total();
  std::vector<IndexedBit> history;
  uint64_t visited = 0;
  auto rec = [&](auto&& self) -> void {
    if (++visited > budget)
      throw Error(ErrorKind::Budget, "verifier path exploration exceeded budget " +
                                         std::to_string(budget));
    VerifierAction a = v.act(history);
    if (a.is_verdict) {
      on_leaf(history, a.verdict);
      return;
    }
    if (a.index < 0 || a.index >= total)
      throw Error(ErrorKind::Internal, "verifier probed index outside its space");
    for (const IndexedBit& h : history)
      if (h.index == a.index)
        throw Error(ErrorKind::Internal, "verifier repeated probe of index " +
                                             std::to_string(a.index) + " on one path");
    if (static_cast<int>(history.size()) >= v.ell())
      throw Error(ErrorKind::Internal,
                  "verifier path exceeds declared bound ell=" + std::to_string(v.ell()));
    on_query(history, a.index);
    for (uint8_t b = 0; b <= 1; ++b) {
      history.push_back(IndexedBit{a.index, b});
      self(self);
      history.pop_back();
    }
  };
  rec(rec);
}

}  // namespace

ExploreResult explore_verifier(const Verifier& v, uint64_t budget) {
  ExploreResult res;
  walk_verifier(
      v, budget,
      [&](const std::vector<IndexedBit>& hist, uint8_t) {
        ++res.paths;
        res.max_probes = std::max(res.max_probes, static_cast<int>(hist.size()));
      },
      [&](const std::vector<IndexedBit>&, int index) { res.queried.insert(index); });
  return res;
}

std::set<int> queried_variable_set(const Verifier& v, uint64_t budget) {
  if (v.ell() > 24)
    throw Error(ErrorKind::Budget, "queried_variable_set requires ell <= 24, verifier declares " +
                                       std::to_string(v.ell()));
  ExploreResult res = explore_verifier(v, budget);
  if (res.queried.size() > pow2(v.ell()))
    throw Error(ErrorKind::Internal, "verifier depends on more than 2^ell variables");
  return res.queried;
}

DecisionTree verifier_to_tree(const Verifier& v, uint64_t budget) {
  std::vector<DecisionTree::Node> nodes;
  std::vector<IndexedBit> history;
  uint64_t visited = 0;
  auto rec = [&](auto&& self) -> int {
    if (++visited > budget)
      throw Error(ErrorKind::Budget, "verifier flatten exceeded budget " + std::to_string(budget));
    VerifierAction a = v.act(history);
    if (a.is_verdict) return a.verdict ? DecisionTree::kLeaf1 : DecisionTree::kLeaf0;
    int id = static_cast<int>(nodes.size());
    nodes.push_back(DecisionTree::Node{a.index, 0, 0});
    history.push_back(IndexedBit{a.index, 0});
    int c0 = self(self);
    history.pop_back();
    history.push_back(IndexedBit{a.index, 1});
    int c1 = self(self);
    history.pop_back();
    nodes[id].c0 = c0;
    nodes[id].c1 = c1;
    return id;
  };
  int root = rec(rec);
  return DecisionTree(v.space().total(), std::move(nodes), root);
}

std::vector<std::pair<uint32_t, Transcript>> enumerate_valid_pairs(const DebateSystem& sys,
                                                                   uint64_t budget) {
  if (sys.n + sys.k >= 60 || pow2(sys.n) * pow2(sys.k) * 2 > budget)
    throw Error(ErrorKind::Budget, "valid-transcript enumeration needs 2^" +
                                       std::to_string(sys.n + sys.k + 1) +
                                       " interactions, budget is " + std::to_string(budget));
  std::set<std::pair<uint32_t, Transcript>> pairs;
  for (uint32_t xi = 0; xi < pow2(sys.n); ++xi) {
    Bits x = bits_of_index(xi, sys.n);
    for (int adversary_role = 0; adversary_role <= 1; ++adversary_role) {
      Bits history;
      auto rec = [&](auto&& self, int round) -> void {
        if (round > sys.k) {
          pairs.emplace(xi, Transcript{history});
          return;
        }
        size_t mark = history.size();
        auto emit_honest = [&](int side) {
          const ProverStrategy& honest = side == 0 ? *sys.strategy0 : *sys.strategy1;
          history.push_back(honest.next_bit(x, history) & 1);
        };
        if (adversary_role == 0) {
          for (uint8_t a = 0; a <= 1; ++a) {
            history.push_back(a);
            emit_honest(1);
            self(self, round + 1);
            history.resize(mark);
          }
        } else {
          emit_honest(0);
          for (uint8_t b = 0; b <= 1; ++b) {
            history.push_back(b);
            self(self, round + 1);
            history.pop_back();
          }
          history.resize(mark);
        }
      };
      rec(rec, 1);
    }
  }
  return {pairs.begin(), pairs.end()};
}

}  // namespace dqc
