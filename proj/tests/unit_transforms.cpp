#include <doctest.h>

#include "dqc/corpus.hpp"
#include "dqc/transforms.hpp"
#include "helpers.hpp"

using namespace dqc;
using namespace dqc::testing;

TEST_SUITE("transforms") {

TEST_CASE("padding inserts never-probed rounds and keeps validity") {
  auto c = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*c);
  BoolFn f = c->truth_table("and:2");
  DebateSystem padded = pad_rounds(sys, {1, 3, 4, 5, 6});
  CHECK(padded.k == sys.k + 5);
  ValidityReport rep = check_validity(padded, f, pow2(22));
  CHECK(rep.valid);
  // The padded positions never appear in the queried set.
  std::set<int> s = queried_variable_set(*padded.verifier);
  IndexSpace sp = padded.space();
  for (int r : {1, 3, 4, 5, 6}) {
    CHECK(s.count(sp.alpha_pos(r)) == 0);
    CHECK(s.count(sp.beta_pos(r)) == 0);
  }
}

TEST_CASE("compress removes exactly the padded rounds and re-validates") {
  auto c = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*c);
  BoolFn f = c->truth_table("and:2");
  DebateSystem padded = pad_rounds(sys, {2, 3, 4, 5, 6});
  CHECK(padded.k == 6);
  CompressResult res = compress_rounds(padded, &f, pow2(22));
  CHECK(res.system.k == sys.k);
  CHECK(res.removed_rounds.size() == 5);
  CHECK(check_validity(res.system, f, pow2(22)).valid);
  // Transcript stays within the queried-set bound: 2k' <= 2|S| <= 2^(ell+1).
  CHECK(2 * res.system.k <= 2 * static_cast<int>(res.queried_transcript_size));
  CHECK(2 * res.queried_set_size <= pow2(res.system.ell_bound + 1));

  // Behavior is preserved run-for-run, not just validity: all-honest runs
  // produce the same verdict on every input.
  for (uint32_t xi = 0; xi < 4; ++xi) {
    Bits x = bits_of_index(xi, 2);
    RunResult a = run_debate(sys, x, 0, strategy_bits(sys.strategy0, x));
    RunResult b = run_debate(res.system, x, 0, strategy_bits(res.system.strategy0, x));
    CHECK(a.verdict == b.verdict);
  }
}

TEST_CASE("compress leaves a fully probed system unchanged") {
  auto c = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*c);
  BoolFn f = c->truth_table("and:2");
  CompressResult res = compress_rounds(sys, &f, pow2(22));
  CHECK(res.system.k == sys.k);
  CHECK(res.removed_rounds.empty());

  // Idempotence: compressing again removes nothing.
  CompressResult res2 = compress_rounds(res.system, &f, pow2(22));
  CHECK(res2.removed_rounds.empty());
  CHECK(res2.system.k == res.system.k);
}

TEST_CASE("compress handles interior removals on cross-exam padding") {
  auto c = circuit_of("inputs 2\ngate g1 OR x1 x2\noutput g1\n");
  DebateSystem sys = crossexam_for(c);
  BoolFn f = c->truth_table("or:2");
  DebateSystem padded = pad_rounds(sys, {1, 2, 4});
  CompressResult res = compress_rounds(padded, &f, pow2(24));
  CHECK(res.system.k == sys.k);
  CHECK(check_validity(res.system, f, pow2(24)).valid);
  CHECK(res.system.index_map.size() == static_cast<size_t>(res.system.space().total()));
}

TEST_CASE("compile: KW AND_2 against its own flattened verifier") {
  auto c = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*c);
  BoolFn f = c->truth_table("and:2");
  DecisionTree tree = verifier_to_tree(*sys.verifier);
  auto cv = std::make_shared<Circuit>(decision_tree_to_circuit(tree));
  CompileResult res = crossexam_compile(sys, cv, pow2(24));
  CHECK(res.m == cv->size());
  CHECK(res.system.ell_bound == ceil_log2(res.m) + 3);
  ValidityReport rep = check_validity(res.system, f, pow2(25));
  CHECK(rep.valid);
  CHECK(rep.max_probes_observed <= ceil_log2(res.m) + 3);
}

TEST_CASE("compile rejects a wrong verifier circuit with a witness") {
  auto c = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*c);
  // Constant-1 circuit over the right input count.
  CircuitBuilder b(sys.space().total());
  auto cv = std::make_shared<Circuit>(b.finish(b.or_(b.input(1), b.not_(b.input(1)))));
  try {
    crossexam_compile(sys, cv, pow2(24));
    FAIL("expected precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
    CHECK(std::string(e.what()).find("x=") != std::string::npos);
    CHECK(std::string(e.what()).find("transcript=") != std::string::npos);
  }
}

TEST_CASE("compile bound versus the original: the 4.1 remark") {
  auto c = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*c);
  DecisionTree tree = verifier_to_tree(*sys.verifier);
  auto cv = std::make_shared<Circuit>(decision_tree_to_circuit(tree));
  CompileResult res = crossexam_compile(sys, cv, pow2(24));
  int compiled_bound = ceil_log2(res.m) + 3;
  int ell = sys.ell_bound;
  // When m >= 2^ell the compiled bound can only be worse (>= ell + 3).
  if (static_cast<uint64_t>(res.m) >= pow2(ell)) CHECK(compiled_bound >= ell + 3);
  // When m < 2^ell the relation flips below that ceiling.
  if (static_cast<uint64_t>(res.m) < pow2(ell)) CHECK(compiled_bound <= ell + 3);
}

TEST_CASE("advice extraction of a single-probe verifier") {
  EchoVerifier echo(IndexSpace{2, 1}, 0);
  AdviceTable t = extract_advice(echo);
  CHECK(t.next.size() == 1);
  CHECK(t.verdict.size() == 2);
  CHECK(t.next.at("") == 0);
  CHECK(t.verdict.at("0") == 0);
  CHECK(t.verdict.at("1") == 1);
}

TEST_CASE("advice row bound on a depth-2 KW verifier") {
  auto c = circuit_of("inputs 2\ngate g1 OR x1 x2\noutput g1\n");  // normalized depth 2
  DebateSystem sys = kw_for(*c);
  CHECK(sys.ell_bound == 3);
  AdviceTable t = extract_advice(sys);
  CHECK(t.rows() <= pow2(4) - 1);
  // redacted set: ascending transcript indices, renumbered from zero.
  for (size_t i = 0; i < t.redacted.size(); ++i) {
    CHECK(t.redacted[i].first >= sys.n);
    CHECK(t.redacted[i].second == static_cast<int>(i));
    if (i > 0) CHECK(t.redacted[i].first > t.redacted[i - 1].first);
  }
}

TEST_CASE("advice round trip is extensionally the verifier") {
  auto c = circuit_of("inputs 2\ngate g1 AND x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*c);
  AdviceTable t = extract_advice(sys);
  IndexSpace sp = sys.space();
  for (uint32_t v = 0; v < pow2(sp.total()); ++v) {
    Bits all = bits_of_index(v, sp.total());
    Bits x(all.begin(), all.begin() + sp.n);
    Transcript tr{Bits(all.begin() + sp.n, all.end())};
    RunResult direct = run_verifier(*sys.verifier, x, tr);
    auto [verdict, probes] = simulate_with_advice(t, x, tr);
    CHECK(verdict == direct.verdict);
    CHECK(probes == direct.probes);
  }
}

TEST_CASE("advice serialization round trip and corruption error") {
  auto c = circuit_of("inputs 2\ngate g1 OR x1 x2\noutput g1\n");
  DebateSystem sys = kw_for(*c);
  AdviceTable t = extract_advice(sys);
  AdviceTable back = AdviceTable::parse(t.serialize());
  CHECK(back.next == t.next);
  CHECK(back.verdict == t.verdict);
  CHECK(back.redacted == t.redacted);
  CHECK(back.ell == t.ell);

  AdviceTable broken = t;
  broken.verdict.clear();
  Bits x = bits_from_string("11");
  Transcript tr{Bits(static_cast<size_t>(2 * sys.k), 0)};
  CHECK_THROWS_AS(simulate_with_advice(broken, x, tr), Error);
  try {
    simulate_with_advice(broken, x, tr);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CorruptTable);
  }
}

TEST_CASE("advice probe sequences equal verifier probe sequences") {
  Rng rng(91);
  for (int trial = 0; trial < 6; ++trial) {
    RandomCircuitParams p;
    p.n = 2;
    p.min_size = 1;
    p.max_size = 6;
    p.depth_cap = 3;
    auto c = std::make_shared<Circuit>(random_circuit(rng, p));
    DebateSystem sys = kw_for(*c);
    AdviceTable t = extract_advice(sys);
    IndexSpace sp = sys.space();
    for (uint32_t v = 0; v < pow2(sp.total()); ++v) {
      Bits all = bits_of_index(v, sp.total());
      Bits x(all.begin(), all.begin() + sp.n);
      Transcript tr{Bits(all.begin() + sp.n, all.end())};
      auto [verdict, probes] = simulate_with_advice(t, x, tr);
      RunResult direct = run_verifier(*sys.verifier, x, tr);
      CHECK(probes == direct.probes);
      CHECK(verdict == direct.verdict);
    }
  }
}

}  // TEST_SUITE
