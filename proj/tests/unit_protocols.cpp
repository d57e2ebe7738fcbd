#include <doctest.h>

#include "dqc/corpus.hpp"
#include "dqc/protocols.hpp"
#include "helpers.hpp"

using namespace dqc;
using namespace dqc::testing;

TEST_SUITE("protocols") {

TEST_CASE("KW on AND_2: one round, two probes, valid") {
  auto c = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*c);
  CHECK(sys.k == 1);
  CHECK(sys.ell_bound == 2);
  ValidityReport rep = check_validity(sys, c->truth_table("and:2"), pow2(20));
  CHECK(rep.valid);
  CHECK(rep.max_probes_observed <= 2);
}

TEST_CASE("KW on (x1&x2)|(x3&x4): normalized depth 3, probes <= 4") {
  auto c = circuit_of(
      "inputs 4\ngate a AND x1 x2\ngate b AND x3 x4\ngate o OR a b\noutput o\n");
  auto norm = std::make_shared<NormalizedCircuit>(NormalizedCircuit::normalize(*c));
  CHECK(norm->depth() == 3);  // root wrap over the OR
  DebateSystem sys = build_kw_debate(norm);
  CHECK(sys.ell_bound == 4);
  ValidityReport rep = check_validity(sys, c->truth_table("f"), pow2(22));
  CHECK(rep.valid);
  CHECK(rep.max_probes_observed <= 4);
}

TEST_CASE("KW on AND(x1,x1): verdict equals x1 with two probes") {
  auto c = circuit_of("inputs 1\ngate g1 AND x1 x1\noutput g1\n");
  DebateSystem sys = kw_for(*c);
  for (uint8_t bit : {0, 1}) {
    Bits x{bit};
    RunResult r = run_debate(sys, x, 0, constant_bits(0));
    CHECK(r.verdict == bit);
    CHECK(r.probes.size() == 2);
  }
  CHECK(check_validity(sys, c->truth_table("wire"), pow2(16)).valid);
}

TEST_CASE("cross-exam on the 1-gate AND_2: B forced to 1, probes <= 4") {
  auto c = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = crossexam_for(c);
  CHECK(sys.k == 2);  // m=1 claim round + 1 challenge round
  CHECK(sys.ell_bound == 4);
  ValidityReport rep = check_validity(sys, c->truth_table("and:2"), pow2(20));
  CHECK(rep.valid);
  CHECK(rep.max_probes_observed <= 4);
}

TEST_CASE("cross-exam on a size-8 parity-3 circuit: probes <= log2(8)+3 = 6") {
  auto c = std::make_shared<Circuit>(parity_circuit(3));
  REQUIRE(c->size() == 8);
  DebateSystem sys = crossexam_for(c);
  CHECK(sys.ell_bound == 6);
  ValidityReport rep = check_validity(sys, c->truth_table("parity:3"), pow2(24));
  CHECK(rep.valid);
  CHECK(rep.max_probes_observed <= 6);
}

TEST_CASE("cross-exam: all-zero claims are caught by the honest challenger") {
  auto c = std::make_shared<Circuit>(parity_circuit(3));
  DebateSystem sys = crossexam_for(c);
  Bits x = bits_from_string("100");  // f(x) = 1
  RunResult r = run_debate(sys, x, 0, constant_bits(0));
  CHECK(r.verdict == 1);
}

TEST_CASE("cross-exam with the output verdict rule on 0-inputs") {
  auto c = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = crossexam_for(c);
  // Adversarial Prover 1 pointing anywhere on x=00 still loses.
  Bits x = bits_from_string("00");
  for (uint8_t choice : {0, 1}) {
    RunResult r = run_debate(sys, x, 1, constant_bits(choice));
    CHECK(r.verdict == 0);
  }
}

TEST_CASE("cross-exam requires the output to be the last gate") {
  auto c = circuit_of("inputs 1\ngate g1 NOT x1\ngate g2 NOT g1\noutput g1\n");
  CHECK_THROWS_AS(build_crossexam_debate(c), Error);
  try {
    build_crossexam_debate(c);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
  }
}

TEST_CASE("NOT gates are checked with the one-operand table") {
  auto c = circuit_of("inputs 1\ngate g1 NOT x1\ngate g2 NOT g1\ngate g3 NOT g2\noutput g3\n");
  DebateSystem sys = crossexam_for(c);
  ValidityReport rep = check_validity(sys, c->truth_table("not3"), pow2(16));
  CHECK(rep.valid);
  // Challenge width + claim + single operand.
  CHECK(rep.max_probes_observed <= crossexam_challenge_width(3) + 2);
}

TEST_CASE("both builders validate across a random corpus slice") {
  Rng rng(47);
  int built = 0;
  for (int trial = 0; trial < 25; ++trial) {
    RandomCircuitParams p;
    p.n = 2 + static_cast<int>(rng.below(3));
    p.min_size = 2;
    p.max_size = 9;
    p.depth_cap = 3;
    auto c = std::make_shared<Circuit>(random_circuit(rng, p));
    BoolFn f = c->truth_table("rand");

    DebateSystem kw = kw_for(*c);
    ValidityReport kwrep = check_validity(kw, f, pow2(24));
    CHECK(kwrep.valid);
    auto norm = NormalizedCircuit::normalize(*c);
    CHECK(kwrep.max_probes_observed <= norm.depth() + 1);

    DebateSystem ce = crossexam_for(c);
    ValidityReport cerep = check_validity(ce, f, pow2(24));
    CHECK(cerep.valid);
    CHECK(cerep.max_probes_observed <= ceil_log2(c->size()) + 3);
    ++built;
  }
  CHECK(built == 25);
}

TEST_CASE("corollary 3.3 arithmetic on a report") {
  // probes >= log2 n + 6 would force size >= 8n; emitted as 2^(probes-3) <= m.
  auto c = std::make_shared<Circuit>(parity_circuit(3));
  DebateSystem sys = crossexam_for(c);
  ValidityReport rep = check_validity(sys, c->truth_table("parity:3"), pow2(24));
  int probes = rep.max_probes_observed;
  if (probes >= 3) CHECK(pow2(probes - 3) <= static_cast<uint64_t>(c->size()));
}

}  // TEST_SUITE
