#include <doctest.h>

#include "dqc/corpus.hpp"
#include "dqc/debate.hpp"
#include "helpers.hpp"

using namespace dqc;
using namespace dqc::testing;

TEST_SUITE("debate") {

TEST_CASE("index space layout") {
  IndexSpace sp{3, 2};
  CHECK(sp.total() == 7);
  CHECK(sp.x_pos(1) == 0);
  CHECK(sp.x_pos(3) == 2);
  CHECK(sp.alpha_pos(1) == 3);
  CHECK(sp.beta_pos(1) == 4);
  CHECK(sp.alpha_pos(2) == 5);
  CHECK(sp.beta_pos(2) == 6);
  CHECK(sp.is_x(2));
  CHECK(sp.is_alpha(3));
  CHECK_FALSE(sp.is_alpha(4));
  CHECK(sp.round_of(6) == 2);
}

TEST_CASE("run_debate replays deterministically") {
  auto and2 = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*and2);
  Bits x = bits_from_string("11");

  // Prover 0 dishonest and playing all zeros: honest Prover 1 still wins.
  RunResult r = run_debate(sys, x, 0, constant_bits(0));
  CHECK(r.verdict == 1);
  RunResult again = run_debate(sys, x, 0, constant_bits(0));
  CHECK(again.transcript == r.transcript);
  CHECK(again.verdict == r.verdict);
  CHECK(again.probes == r.probes);

  // An adversary playing the honest strategy reproduces the all-honest run.
  RunResult honest_adv = run_debate(sys, x, 0, strategy_bits(sys.strategy0, x));
  RunResult all_honest = run_debate(sys, x, 1, strategy_bits(sys.strategy1, x));
  CHECK(honest_adv.transcript == all_honest.transcript);
  CHECK(honest_adv.verdict == all_honest.verdict);
}

TEST_CASE("run_debate rejects an exhausted chooser") {
  auto and2 = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*and2);
  BitChooser empty = [](std::span<const uint8_t>) { return std::optional<uint8_t>(); };
  CHECK_THROWS_AS(run_debate(sys, bits_from_string("11"), 0, empty), Error);
}

TEST_CASE("check_validity on the KW AND_2 system") {
  auto and2 = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*and2);
  BoolFn f = and2->truth_table("and:2");
  ValidityReport rep = check_validity(sys, f, pow2(20));
  CHECK(rep.valid);
  CHECK(rep.max_probes_observed <= 2);
  CHECK_FALSE(rep.counterexample.has_value());
  CHECK(rep.leaf_evals == pow2(sys.n) * pow2(sys.k));
}

TEST_CASE("an always-1 verifier is invalid for AND_2 with counterexample 00") {
  BoolFn f = BoolFn::builtin("and", 2);
  DebateSystem sys = system_with_verifier(
      2, 1, std::make_shared<ConstantVerifier>(IndexSpace{2, 1}, 1), 0);
  ValidityReport rep = check_validity(sys, f, pow2(20));
  CHECK_FALSE(rep.valid);
  REQUIRE(rep.counterexample.has_value());
  CHECK(bits_to_string(rep.counterexample->x) == "00");
  CHECK(rep.counterexample->verdict == 1);
}

TEST_CASE("budget exceedance is an error naming the requirement") {
  auto and2 = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*and2);
  BoolFn f = and2->truth_table("and:2");
  try {
    check_validity(sys, f, 4);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Budget);
    CHECK(std::string(e.what()).find("2^3") != std::string::npos);
  }
}

TEST_CASE("game_value reconstructs f from V") {
  auto and2 = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*and2);
  BoolFn f = and2->truth_table("and:2");
  GameValueReport g = game_value(*sys.verifier, f, pow2(20));
  CHECK(g.all_agree);

  // Constant-1 verifier: game value is constantly 1.
  ConstantVerifier one(IndexSpace{2, 1}, 1);
  GameValueReport gc = game_value(one, BoolFn::builtin("const1", 2), pow2(20));
  CHECK(gc.all_agree);
  GameValueReport gbad = game_value(one, f, pow2(20));
  CHECK_FALSE(gbad.all_agree);
  CHECK(gbad.disagreements.size() == 3);  // every non-11 input

  auto or2 = circuit_of("inputs 2\ngate g1 OR x1 x2\noutput g1\n");
  DebateSystem ce = crossexam_for(or2);
  GameValueReport go = game_value(*ce.verifier, or2->truth_table("or:2"), pow2(22));
  CHECK(go.all_agree);
}

TEST_CASE("validity implies game-value agreement (independent routes concur)") {
  Rng rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    RandomCircuitParams p;
    p.n = 2 + static_cast<int>(rng.below(2));
    p.min_size = 1;
    p.max_size = 6;
    p.depth_cap = 3;
    auto c = std::make_shared<Circuit>(random_circuit(rng, p));
    BoolFn f = c->truth_table("rand");
    DebateSystem sys = kw_for(*c);
    ValidityReport rep = check_validity(sys, f, pow2(24));
    REQUIRE(rep.valid);
    CHECK(game_value(*sys.verifier, f, pow2(24)).all_agree);
  }
}

TEST_CASE("queried_variable_set basics") {
  EchoVerifier echo(IndexSpace{2, 1}, 0);
  std::set<int> s = queried_variable_set(echo);
  CHECK(s == std::set<int>{0});

  auto and2 = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*and2);
  std::set<int> skw = queried_variable_set(*sys.verifier);
  // Selector alpha_1 plus both reachable leaf inputs.
  CHECK(skw.count(sys.space().alpha_pos(1)) == 1);
  CHECK(skw.count(0) == 1);
  CHECK(skw.count(1) == 1);
  CHECK(skw.size() <= pow2(sys.verifier->ell()));
}

TEST_CASE("explore_verifier enforces the declared probe bound") {
  // Lies about ell: claims 0 but probes once.
  class Liar final : public Verifier {
   public:
    IndexSpace space() const override { return IndexSpace{1, 0}; }
    int ell() const override { return 0; }
    VerifierAction act(std::span<const IndexedBit> h) const override {
      if (h.empty()) return VerifierAction::query(0);
      return VerifierAction::decide(h[0].bit);
    }
  };
  CHECK_THROWS_AS(explore_verifier(Liar{}), Error);

  // Repeats an index on one path.
  class Repeater final : public Verifier {
   public:
    IndexSpace space() const override { return IndexSpace{1, 0}; }
    int ell() const override { return 3; }
    VerifierAction act(std::span<const IndexedBit> h) const override {
      if (h.size() < 2) return VerifierAction::query(0);
      return VerifierAction::decide(0);
    }
  };
  CHECK_THROWS_AS(explore_verifier(Repeater{}), Error);
}

TEST_CASE("verifier_to_tree reproduces the verifier") {
  auto and2 = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*and2);
  DecisionTree tree = verifier_to_tree(*sys.verifier);
  CHECK(tree.depth() <= sys.verifier->ell());
  for (uint32_t v = 0; v < pow2(sys.space().total()); ++v) {
    Bits all = bits_of_index(v, sys.space().total());
    Bits x(all.begin(), all.begin() + 2);
    Transcript t{Bits(all.begin() + 2, all.end())};
    CHECK(tree.eval(all) == verifier_value(*sys.verifier, x, t));
  }
}

TEST_CASE("enumerate_valid_pairs is deterministic and holds the honest runs") {
  auto and2 = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*and2);
  auto pairs = enumerate_valid_pairs(sys, pow2(20));
  auto pairs2 = enumerate_valid_pairs(sys, pow2(20));
  CHECK(pairs == pairs2);
  for (uint32_t xi = 0; xi < 4; ++xi) {
    Bits x = bits_of_index(xi, 2);
    RunResult honest = run_debate(sys, x, 0, strategy_bits(sys.strategy0, x));
    bool found = false;
    for (const auto& [pxi, pt] : pairs)
      found |= (pxi == xi && pt == honest.transcript);
    CHECK(found);
  }
}

}  // TEST_SUITE
