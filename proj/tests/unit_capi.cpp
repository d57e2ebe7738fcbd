#include <doctest.h>

#include <filesystem>
#include <string>
#include <unistd.h>

#include "dqc/dqc.h"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("dqc_capi_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string rep(const dqc_report* r, const char* key) {
  const char* v = dqc_report_get(r, key);
  return v ? v : "";
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("function handles: eval, dependence, witnesses, errors") {
  dqc_boolfn* f = nullptr;
  REQUIRE(dqc_fn_builtin("majority:3", &f) == DQC_OK);
  CHECK(dqc_fn_n(f) == 3);
  CHECK(std::string(dqc_fn_label(f)) == "majority:3");
  int bit = -1;
  CHECK(dqc_fn_eval(f, "110", &bit) == DQC_OK);
  CHECK(bit == 1);
  CHECK(dqc_fn_eval(f, "11", &bit) == DQC_ERR_INPUT);
  CHECK(std::string(dqc_last_error()).find("3") != std::string::npos);
  int dep = 0;
  CHECK(dqc_fn_depends_on(f, 2, &dep) == DQC_OK);
  CHECK(dep == 1);
  char w[8], wt[8];
  CHECK(dqc_fn_witness_pair(f, 1, w, wt, sizeof w) == DQC_OK);
  CHECK(std::string(w) == "001");
  CHECK(std::string(wt) == "101");
  dqc_fn_free(f);

  dqc_boolfn* c0 = nullptr;
  REQUIRE(dqc_fn_builtin("const0:2", &c0) == DQC_OK);
  CHECK(dqc_fn_witness_pair(c0, 1, w, wt, sizeof w) == DQC_ERR_NO_WITNESS);
  dqc_fn_free(c0);

  CHECK(dqc_fn_builtin("bogus:2", &f) == DQC_ERR_PARSE);
  CHECK(dqc_fn_builtin(nullptr, &f) == DQC_ERR_INPUT);
}

TEST_CASE("circuit handles and parse errors") {
  dqc_circuit* c = nullptr;
  REQUIRE(dqc_circuit_parse("inputs 2\ngate g1 AND x1 x2\noutput g1\n", &c) == DQC_OK);
  CHECK(dqc_circuit_inputs(c) == 2);
  CHECK(dqc_circuit_size(c) == 1);
  CHECK(dqc_circuit_depth(c) == 1);
  int bit = -1;
  CHECK(dqc_circuit_eval(c, "11", &bit) == DQC_OK);
  CHECK(bit == 1);
  int nd = 0;
  CHECK(dqc_circuit_normalized_depth(c, &nd) == DQC_OK);
  CHECK(nd == 1);
  dqc_circuit_free(c);

  CHECK(dqc_circuit_parse("inputs 2\ngate g1 AND x1 zz\noutput g1\n", &c) == DQC_ERR_PARSE);
  CHECK(dqc_circuit_load("/nonexistent.nl", &c) == DQC_ERR_IO);
}

TEST_CASE("system build, validity, queried set, game value") {
  dqc_circuit* c = nullptr;
  REQUIRE(dqc_circuit_parity(3, &c) == DQC_OK);
  dqc_system* sys = nullptr;
  REQUIRE(dqc_system_build("kw", c, &sys) == DQC_OK);
  CHECK(dqc_system_n(sys) == 3);
  CHECK(std::string(dqc_system_provenance(sys)) == "kw");
  dqc_boolfn* f = nullptr;
  REQUIRE(dqc_circuit_truth_table(c, &f) == DQC_OK);

  dqc_report* validity = nullptr;
  REQUIRE(dqc_system_check_validity(sys, f, uint64_t{1} << 24, &validity) == DQC_OK);
  CHECK(rep(validity, "valid") == "true");
  CHECK(std::stoi(rep(validity, "max_probes_observed")) <= dqc_system_ell(sys));
  dqc_report_free(validity);

  dqc_report* game = nullptr;
  REQUIRE(dqc_system_game_value(sys, f, uint64_t{1} << 24, &game) == DQC_OK);
  CHECK(rep(game, "all_agree") == "true");
  dqc_report_free(game);

  dqc_report* qs = nullptr;
  REQUIRE(dqc_system_queried_set(sys, uint64_t{1} << 24, &qs) == DQC_OK);
  CHECK(rep(qs, "x_size") == "3");  // parity depends on every variable
  dqc_report_free(qs);

  // Budget errors surface as DQC_ERR_BUDGET.
  dqc_report* small = nullptr;
  CHECK(dqc_system_check_validity(sys, f, 2, &small) == DQC_ERR_BUDGET);

  dqc_fn_free(f);
  dqc_system_free(sys);
  dqc_circuit_free(c);
}

TEST_CASE("pad, compress, compile via handles") {
  dqc_circuit* c = nullptr;
  REQUIRE(dqc_circuit_parse("inputs 2\ngate g1 AND x1 x2\noutput g1\n", &c) == DQC_OK);
  dqc_system* sys = nullptr;
  REQUIRE(dqc_system_build("kw", c, &sys) == DQC_OK);
  dqc_boolfn* f = nullptr;
  REQUIRE(dqc_circuit_truth_table(c, &f) == DQC_OK);

  int positions[] = {1, 3};
  dqc_system* padded = nullptr;
  REQUIRE(dqc_system_pad(sys, positions, 2, &padded) == DQC_OK);
  CHECK(dqc_system_k(padded) == dqc_system_k(sys) + 2);

  dqc_system* squeezed = nullptr;
  dqc_report* crep = nullptr;
  REQUIRE(dqc_system_compress(padded, f, uint64_t{1} << 24, &squeezed, &crep) == DQC_OK);
  CHECK(dqc_system_k(squeezed) == dqc_system_k(sys));
  CHECK(rep(crep, "rounds_removed") == "2");
  dqc_report_free(crep);

  dqc_tree* tree = nullptr;
  REQUIRE(dqc_system_verifier_tree(sys, &tree) == DQC_OK);
  dqc_circuit* cv = nullptr;
  REQUIRE(dqc_tree_to_circuit(tree, &cv) == DQC_OK);
  dqc_system* compiled = nullptr;
  dqc_report* krep = nullptr;
  REQUIRE(dqc_system_compile(sys, cv, uint64_t{1} << 24, &compiled, &krep) == DQC_OK);
  CHECK(std::stoi(rep(krep, "m")) == dqc_circuit_size(cv));
  dqc_report* validity = nullptr;
  REQUIRE(dqc_system_check_validity(compiled, f, uint64_t{1} << 25, &validity) == DQC_OK);
  CHECK(rep(validity, "valid") == "true");

  dqc_report_free(validity);
  dqc_report_free(krep);
  dqc_system_free(compiled);
  dqc_circuit_free(cv);
  dqc_tree_free(tree);
  dqc_system_free(squeezed);
  dqc_system_free(padded);
  dqc_fn_free(f);
  dqc_system_free(sys);
  dqc_circuit_free(c);
}

TEST_CASE("advice handles round trip through files") {
  TempDir tmp;
  dqc_circuit* c = nullptr;
  REQUIRE(dqc_circuit_parse("inputs 2\ngate g1 OR x1 x2\noutput g1\n", &c) == DQC_OK);
  dqc_system* sys = nullptr;
  REQUIRE(dqc_system_build("kw", c, &sys) == DQC_OK);
  dqc_advice* a = nullptr;
  REQUIRE(dqc_advice_extract(sys, &a) == DQC_OK);
  REQUIRE(dqc_advice_save(a, tmp.file("t.adv").c_str()) == DQC_OK);
  dqc_advice* b = nullptr;
  REQUIRE(dqc_advice_load(tmp.file("t.adv").c_str(), &b) == DQC_OK);
  dqc_report* chk = nullptr;
  REQUIRE(dqc_advice_check(sys, b, uint64_t{1} << 22, &chk) == DQC_OK);
  CHECK(rep(chk, "pass") == "true");
  CHECK(rep(chk, "mismatches") == "0");
  dqc_report_free(chk);
  dqc_advice* stats_in = a;
  dqc_report* stats = nullptr;
  REQUIRE(dqc_advice_stats(stats_in, &stats) == DQC_OK);
  CHECK(std::stoull(rep(stats, "rows")) <= (uint64_t{1} << (std::stoi(rep(stats, "ell")) + 1)) - 1);
  dqc_report_free(stats);
  dqc_advice_free(b);
  dqc_advice_free(a);
  dqc_system_free(sys);
  dqc_circuit_free(c);
}

TEST_CASE("yao and newman through handles") {
  dqc_circuit* c = nullptr;
  REQUIRE(dqc_circuit_parity(4, &c) == DQC_OK);
  dqc_system* sys = nullptr;
  REQUIRE(dqc_system_build("kw", c, &sys) == DQC_OK);
  dqc_boolfn* f = nullptr;
  REQUIRE(dqc_circuit_truth_table(c, &f) == DQC_OK);

  dqc_tree* tree = nullptr;
  REQUIRE(dqc_system_verifier_tree(sys, &tree) == DQC_OK);
  dqc_report* yao = nullptr;
  REQUIRE(dqc_yao_run(sys, f, tree, &yao) == DQC_OK);
  CHECK(rep(yao, "atoms") == "8");
  CHECK(rep(yao, "measured_ge_certified") == "true");
  dqc_report_free(yao);
  dqc_tree_free(tree);

  dqc_rverifier* rv = nullptr;
  REQUIRE(dqc_rv_exact_mix(sys, &rv) == DQC_OK);
  dqc_report* err = nullptr;
  REQUIRE(dqc_rv_error(rv, sys, f, uint64_t{1} << 25, &err) == DQC_OK);
  CHECK(rep(err, "max_error") == "1/3");
  dqc_report_free(err);

  dqc_report* nm = nullptr;
  dqc_system* compiled = nullptr;
  dqc_circuit* cv = nullptr;
  REQUIRE(dqc_newman_run(rv, sys, f, 11, uint64_t{1} << 25, &nm, &compiled, &cv) == DQC_OK);
  CHECK(std::stoi(rep(nm, "attempts")) <= 10);
  CHECK(std::stoi(rep(nm, "t")) == 12 * (2 * dqc_system_k(sys) + 4));
  CHECK(dqc_circuit_size(cv) == std::stoi(rep(nm, "m")));
  dqc_circuit_free(cv);
  dqc_system_free(compiled);
  dqc_report_free(nm);
  dqc_rv_free(rv);
  dqc_fn_free(f);
  dqc_system_free(sys);
  dqc_circuit_free(c);
}

TEST_CASE("machine handles and the pspace pipeline") {
  dqc_machine* m = nullptr;
  REQUIRE(dqc_machine_open("builtin:counter:4", 3, &m) == DQC_OK);
  char cfg[16];
  int acc = -1;
  REQUIRE(dqc_machine_run(m, "0", cfg, sizeof cfg, &acc) == DQC_OK);
  CHECK(std::string(cfg) == "0001");  // 8 with c_1 the low-order bit
  dqc_machine_free(m);

  REQUIRE(dqc_machine_open("builtin:parityaccwrap:2", 2, &m) == DQC_OK);
  dqc_report* pipe = nullptr;
  dqc_system* compiled = nullptr;
  REQUIRE(dqc_pspace_pipeline(m, uint64_t{1} << 24, &pipe, &compiled, nullptr) == DQC_OK);
  int mm = std::stoi(rep(pipe, "m"));
  int bound = std::stoi(rep(pipe, "compiled_probe_bound"));
  CHECK(bound <= 40);
  CHECK(dqc_system_ell(compiled) == bound);
  CHECK(mm > 0);
  dqc_system_free(compiled);
  dqc_report_free(pipe);
  dqc_machine_free(m);

  CHECK(dqc_machine_open("builtin:unknown:1", 2, &m) == DQC_ERR_PARSE);
}

TEST_CASE("report iteration order is stable") {
  dqc_circuit* c = nullptr;
  REQUIRE(dqc_circuit_parse("inputs 2\ngate g1 AND x1 x2\noutput g1\n", &c) == DQC_OK);
  dqc_system* sys = nullptr;
  REQUIRE(dqc_system_build("crossexam", c, &sys) == DQC_OK);
  dqc_boolfn* f = nullptr;
  REQUIRE(dqc_circuit_truth_table(c, &f) == DQC_OK);
  dqc_report* r1 = nullptr;
  dqc_report* r2 = nullptr;
  REQUIRE(dqc_system_check_validity(sys, f, uint64_t{1} << 22, &r1) == DQC_OK);
  REQUIRE(dqc_system_check_validity(sys, f, uint64_t{1} << 22, &r2) == DQC_OK);
  REQUIRE(dqc_report_count(r1) == dqc_report_count(r2));
  for (int i = 0; i < dqc_report_count(r1); ++i) {
    CHECK(std::string(dqc_report_key(r1, i)) == dqc_report_key(r2, i));
    CHECK(std::string(dqc_report_value(r1, i)) == dqc_report_value(r2, i));
  }
  CHECK(dqc_report_get(r1, "nonexistent") == nullptr);
  dqc_report_free(r2);
  dqc_report_free(r1);
  dqc_fn_free(f);
  dqc_system_free(sys);
  dqc_circuit_free(c);
}

}  // TEST_SUITE
