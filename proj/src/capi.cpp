// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#include "dqc/dqc.h"

#include <cstring>

#include "dqc/boolfn.hpp"
#include "dqc/circuit.hpp"
#include "dqc/debate.hpp"
#include "dqc/io.hpp"
#include "dqc/protocols.hpp"
#include "dqc/pspace.hpp"
#include "dqc/randomized.hpp"
#include "dqc/report.hpp"
#include "dqc/transforms.hpp"

struct dqc_boolfn {
  dqc::BoolFn fn;
};
struct dqc_circuit {
  std::shared_ptr<dqc::Circuit> c;
};
struct dqc_system {
  dqc::DebateSystem sys;
};
struct dqc_machine {
  std::shared_ptr<dqc::ToyMachine> m;
};
struct dqc_advice {
  dqc::AdviceTable t;
};
struct dqc_tree {
  dqc::DecisionTree t;
};
struct dqc_rverifier {
  dqc::RandomizedVerifier rv;
};
struct dqc_report {
  dqc::Report r;
};

namespace {

thread_local std::string g_last_error;

dqc_status map_kind(dqc::ErrorKind k) {
  using dqc::ErrorKind;
  switch (k) {
    case ErrorKind::InputShape: return DQC_ERR_INPUT;
    case ErrorKind::IndexRange: return DQC_ERR_RANGE;
    case ErrorKind::NoWitness: return DQC_ERR_NO_WITNESS;
    case ErrorKind::Parse: return DQC_ERR_PARSE;
    case ErrorKind::Budget: return DQC_ERR_BUDGET;
    case ErrorKind::Precondition: return DQC_ERR_PRECONDITION;
    case ErrorKind::CorruptTable: return DQC_ERR_CORRUPT_TABLE;
    case ErrorKind::Construction: return DQC_ERR_CONSTRUCTION;
    case ErrorKind::Io: return DQC_ERR_IO;
    case ErrorKind::Internal: return DQC_ERR_INTERNAL;
  }
  return DQC_ERR_INTERNAL;
}

template <typename Fn>
dqc_status guarded(Fn&& fn) {
  try {
    fn();
    return DQC_OK;
  } catch (const dqc::Error& e) {
    g_last_error = e.what();
    return map_kind(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DQC_ERR_INTERNAL;
  }
}

dqc_status require(bool ok, const char* msg) {
  if (ok) return DQC_OK;
  g_last_error = msg;
  return DQC_ERR_INPUT;
}

dqc::Bits bits_arg(const char* s, int expect) {
  if (s == nullptr) throw dqc::Error(dqc::ErrorKind::InputShape, "null bit string");
  dqc::Bits b = dqc::bits_from_string(s);
  if (expect >= 0 && static_cast<int>(b.size()) != expect)
    throw dqc::Error(dqc::ErrorKind::InputShape,
                     "expected " + std::to_string(expect) + " bits, got " +
                         std::to_string(b.size()));
  return b;
}

void copy_bits(const dqc::Bits& bits, char* buf, size_t cap) {
  std::string s = dqc::bits_to_string(bits);
  if (cap < s.size() + 1)
    throw dqc::Error(dqc::ErrorKind::InputShape, "output buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
}

dqc::Report validity_to_report(const dqc::ValidityReport& rep) {
  dqc::Report r;
  r.set_bool("valid", rep.valid);
  r.set("max_probes_observed", rep.max_probes_observed);
  r.set("leaf_evals", rep.leaf_evals);
  if (rep.counterexample) {
    r.set("counterexample_x", dqc::bits_to_string(rep.counterexample->x));
    r.set("counterexample_role", rep.counterexample->adversary_role);
    r.set("counterexample_bits", dqc::bits_to_string(rep.counterexample->adversary_bits));
    r.set("counterexample_verdict", static_cast<int>(rep.counterexample->verdict));
  }
  return r;
}

}  // namespace

extern "C" {

const char* dqc_last_error(void) { return g_last_error.c_str(); }

/* -- Boolean functions ---------------------------------------------------- */

dqc_status dqc_fn_builtin(const char* spec, dqc_boolfn** out) {
  if (auto s = require(spec && out, "null argument")) return s;
  return guarded([&] { *out = new dqc_boolfn{dqc::BoolFn::builtin_spec(spec)}; });
}

dqc_status dqc_fn_load(const char* path, dqc_boolfn** out) {
  if (auto s = require(path && out, "null argument")) return s;
  return guarded([&] { *out = new dqc_boolfn{dqc::load_function(path)}; });
}

dqc_status dqc_fn_save(const dqc_boolfn* f, const char* path) {
  if (auto s = require(f && path, "null argument")) return s;
  return guarded([&] { dqc::save_function(f->fn, path); });
}

int dqc_fn_n(const dqc_boolfn* f) { return f ? f->fn.n() : 0; }
const char* dqc_fn_label(const dqc_boolfn* f) { return f ? f->fn.label().c_str() : ""; }

dqc_status dqc_fn_eval(const dqc_boolfn* f, const char* x, int* out_bit) {
  if (auto s = require(f && x && out_bit, "null argument")) return s;
  return guarded([&] { *out_bit = f->fn.eval(bits_arg(x, f->fn.n())); });
}

dqc_status dqc_fn_depends_on(const dqc_boolfn* f, int i, int* out) {
  if (auto s = require(f && out, "null argument")) return s;
  return guarded([&] { *out = f->fn.depends_on(i) ? 1 : 0; });
}

dqc_status dqc_fn_witness_pair(const dqc_boolfn* f, int i, char* w, char* w_tilde, size_t cap) {
  if (auto s = require(f && w && w_tilde, "null argument")) return s;
  return guarded([&] {
    dqc::WitnessPair wp = f->fn.witness_pair(i);
    copy_bits(wp.w, w, cap);
    copy_bits(wp.w_tilde, w_tilde, cap);
  });
}

void dqc_fn_free(dqc_boolfn* f) { delete f; }

/* -- Circuits ------------------------------------------------------------- */

dqc_status dqc_circuit_parse(const char* netlist, dqc_circuit** out) {
  if (auto s = require(netlist && out, "null argument")) return s;
  return guarded([&] {
    *out = new dqc_circuit{std::make_shared<dqc::Circuit>(dqc::Circuit::parse_netlist(netlist))};
  });
}

dqc_status dqc_circuit_load(const char* path, dqc_circuit** out) {
  if (auto s = require(path && out, "null argument")) return s;
  return guarded([&] {
    *out = new dqc_circuit{std::make_shared<dqc::Circuit>(dqc::load_circuit(path))};
  });
}

dqc_status dqc_circuit_save(const dqc_circuit* c, const char* path) {
  if (auto s = require(c && path, "null argument")) return s;
  return guarded([&] { dqc::save_circuit(*c->c, path); });
}

dqc_status dqc_circuit_synth(const dqc_boolfn* f, dqc_circuit** out) {
  if (auto s = require(f && out, "null argument")) return s;
  return guarded([&] {
    *out = new dqc_circuit{std::make_shared<dqc::Circuit>(dqc::circuit_for_function(f->fn))};
  });
}

dqc_status dqc_circuit_parity(int n, dqc_circuit** out) {
  if (auto s = require(out != nullptr, "null argument")) return s;
  return guarded([&] {
    *out = new dqc_circuit{std::make_shared<dqc::Circuit>(dqc::parity_circuit(n))};
  });
}

dqc_status dqc_circuit_majority(int t, dqc_circuit** out) {
  if (auto s = require(out != nullptr, "null argument")) return s;
  return guarded([&] {
    *out = new dqc_circuit{std::make_shared<dqc::Circuit>(dqc::majority_circuit(t))};
  });
}

int dqc_circuit_inputs(const dqc_circuit* c) { return c ? c->c->n_inputs() : 0; }
int dqc_circuit_size(const dqc_circuit* c) { return c ? c->c->size() : 0; }
int dqc_circuit_depth(const dqc_circuit* c) { return c ? c->c->depth() : 0; }

dqc_status dqc_circuit_normalized_depth(const dqc_circuit* c, int* out) {
  if (auto s = require(c && out, "null argument")) return s;
  return guarded([&] { *out = dqc::NormalizedCircuit::normalize(*c->c).depth(); });
}

dqc_status dqc_circuit_eval(const dqc_circuit* c, const char* x, int* out_bit) {
  if (auto s = require(c && x && out_bit, "null argument")) return s;
  return guarded([&] { *out_bit = c->c->eval(bits_arg(x, c->c->n_inputs())); });
}

dqc_status dqc_circuit_truth_table(const dqc_circuit* c, dqc_boolfn** out) {
  if (auto s = require(c && out, "null argument")) return s;
  return guarded([&] { *out = new dqc_boolfn{c->c->truth_table("circuit")}; });
}

void dqc_circuit_free(dqc_circuit* c) { delete c; }

/* -- Decision trees ------------------------------------------------------- */

dqc_status dqc_tree_load(const char* path, int space_size, dqc_tree** out) {
  if (auto s = require(path && out, "null argument")) return s;
  return guarded([&] { *out = new dqc_tree{dqc::load_tree(path, space_size)}; });
}

dqc_status dqc_tree_save(const dqc_tree* t, const char* path) {
  if (auto s = require(t && path, "null argument")) return s;
  return guarded([&] { dqc::save_tree(t->t, path); });
}

int dqc_tree_depth(const dqc_tree* t) { return t ? t->t.depth() : 0; }

dqc_status dqc_tree_to_circuit(const dqc_tree* t, dqc_circuit** out) {
  if (auto s = require(t && out, "null argument")) return s;
  return guarded([&] {
    *out = new dqc_circuit{std::make_shared<dqc::Circuit>(dqc::decision_tree_to_circuit(t->t))};
  });
}

void dqc_tree_free(dqc_tree* t) { delete t; }

/* -- Debate systems ------------------------------------------------------- */

dqc_status dqc_system_build(const char* protocol, const dqc_circuit* c, dqc_system** out) {
  if (auto s = require(protocol && c && out, "null argument")) return s;
  return guarded([&] {
    std::string p = protocol;
    if (p == "kw") {
      auto norm =
          std::make_shared<dqc::NormalizedCircuit>(dqc::NormalizedCircuit::normalize(*c->c));
      *out = new dqc_system{dqc::build_kw_debate(norm)};
    } else if (p == "crossexam") {
      *out = new dqc_system{dqc::build_crossexam_debate(c->c)};
    } else {
      throw dqc::Error(dqc::ErrorKind::InputShape, "unknown protocol '" + p + "'");
    }
  });
}

dqc_status dqc_system_load(const char* path, uint64_t budget, dqc_system** out,
                           dqc_boolfn** f_out, dqc_report** report_out) {
  if (auto s = require(path && out, "null argument")) return s;
  return guarded([&] {
    dqc::LoadedSystem loaded = dqc::load_system(path, budget);
    if (f_out) *f_out = new dqc_boolfn{loaded.f};
    if (report_out) {
      dqc::Report r;
      r.set("chain", loaded.chain);
      if (loaded.circuit_size) r.set("circuit_size", *loaded.circuit_size);
      if (loaded.circuit_depth) r.set("circuit_depth", *loaded.circuit_depth);
      if (loaded.normalized_depth) r.set("normalized_depth", *loaded.normalized_depth);
      *report_out = new dqc_report{std::move(r)};
    }
    *out = new dqc_system{std::move(loaded.system)};
  });
}

int dqc_system_n(const dqc_system* s) { return s ? s->sys.n : 0; }
int dqc_system_k(const dqc_system* s) { return s ? s->sys.k : 0; }
int dqc_system_ell(const dqc_system* s) { return s ? s->sys.ell_bound : 0; }
const char* dqc_system_provenance(const dqc_system* s) {
  return s ? s->sys.provenance.c_str() : "";
}

dqc_status dqc_system_max_probes(const dqc_system* s, uint64_t budget, int* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = dqc::explore_verifier(*s->sys.verifier, budget).max_probes; });
}

dqc_status dqc_system_check_validity(const dqc_system* s, const dqc_boolfn* f, uint64_t budget,
                                     dqc_report** out) {
  if (auto st = require(s && f && out, "null argument")) return st;
  return guarded([&] {
    dqc::ValidityReport rep = dqc::check_validity(s->sys, f->fn, budget);
    *out = new dqc_report{validity_to_report(rep)};
  });
}

dqc_status dqc_system_game_value(const dqc_system* s, const dqc_boolfn* f, uint64_t budget,
                                 dqc_report** out) {
  if (auto st = require(s && f && out, "null argument")) return st;
  return guarded([&] {
    dqc::GameValueReport rep = dqc::game_value(*s->sys.verifier, f->fn, budget);
    dqc::Report r;
    r.set_bool("all_agree", rep.all_agree);
    r.set("disagreements", static_cast<uint64_t>(rep.disagreements.size()));
    *out = new dqc_report{std::move(r)};
  });
}

dqc_status dqc_system_queried_set(const dqc_system* s, uint64_t budget, dqc_report** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    std::set<int> qs = dqc::queried_variable_set(*s->sys.verifier, budget);
    size_t x_size = 0;
    for (int idx : qs)
      if (idx < s->sys.n) ++x_size;
    dqc::Report r;
    r.set("set_size", static_cast<uint64_t>(qs.size()));
    r.set("x_size", static_cast<uint64_t>(x_size));
    r.set("transcript_size", static_cast<uint64_t>(qs.size() - x_size));
    *out = new dqc_report{std::move(r)};
  });
}

dqc_status dqc_system_pad(const dqc_system* s, const int* positions, int count, dqc_system** out) {
  if (auto st = require(s && out && (positions || count == 0), "null argument")) return st;
  return guarded([&] {
    std::vector<int> pos(positions, positions + count);
    *out = new dqc_system{dqc::pad_rounds(s->sys, pos)};
  });
}

dqc_status dqc_system_compress(const dqc_system* s, const dqc_boolfn* f, uint64_t budget,
                               dqc_system** out, dqc_report** report_out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    dqc::CompressResult res = dqc::compress_rounds(s->sys, f ? &f->fn : nullptr, budget);
    if (report_out) {
      dqc::Report r;
      r.set("k_before", s->sys.k);
      r.set("k_after", res.system.k);
      r.set("rounds_removed", static_cast<uint64_t>(res.removed_rounds.size()));
      r.set("queried_set_size", static_cast<uint64_t>(res.queried_set_size));
      r.set("queried_transcript_size", static_cast<uint64_t>(res.queried_transcript_size));
      *report_out = new dqc_report{std::move(r)};
    }
    *out = new dqc_system{std::move(res.system)};
  });
}

dqc_status dqc_system_compile(const dqc_system* s, const dqc_circuit* cv, uint64_t budget,
                              dqc_system** out, dqc_report** report_out) {
  if (auto st = require(s && cv && out, "null argument")) return st;
  return guarded([&] {
    dqc::CompileResult res = dqc::crossexam_compile(s->sys, cv->c, budget);
    if (report_out) {
      dqc::Report r;
      r.set("m", res.m);
      r.set("b", res.b);
      r.set("pairs_checked", res.pairs_checked);
      r.set("ell_bound", res.system.ell_bound);
      *report_out = new dqc_report{std::move(r)};
    }
    *out = new dqc_system{std::move(res.system)};
  });
}

dqc_status dqc_system_verifier_tree(const dqc_system* s, dqc_tree** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = new dqc_tree{dqc::verifier_to_tree(*s->sys.verifier)}; });
}

void dqc_system_free(dqc_system* s) { delete s; }

/* -- Advice tables -------------------------------------------------------- */

dqc_status dqc_advice_extract(const dqc_system* s, dqc_advice** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = new dqc_advice{dqc::extract_advice(s->sys)}; });
}

dqc_status dqc_advice_load(const char* path, dqc_advice** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return guarded([&] { *out = new dqc_advice{dqc::load_advice(path)}; });
}

dqc_status dqc_advice_save(const dqc_advice* a, const char* path) {
  if (auto st = require(a && path, "null argument")) return st;
  return guarded([&] { dqc::save_advice(a->t, path); });
}

dqc_status dqc_advice_stats(const dqc_advice* a, dqc_report** out) {
  if (auto st = require(a && out, "null argument")) return st;
  return guarded([&] {
    dqc::Report r;
    r.set("rows", static_cast<uint64_t>(a->t.rows()));
    r.set("next_rows", static_cast<uint64_t>(a->t.next.size()));
    r.set("verdict_rows", static_cast<uint64_t>(a->t.verdict.size()));
    r.set("redacted", static_cast<uint64_t>(a->t.redacted.size()));
    r.set("payload_bits", static_cast<uint64_t>(a->t.payload_bits()));
    r.set("ell", a->t.ell);
    *out = new dqc_report{std::move(r)};
  });
}

dqc_status dqc_advice_check(const dqc_system* s, const dqc_advice* a, uint64_t budget,
                            dqc_report** out) {
  if (auto st = require(s && a && out, "null argument")) return st;
  return guarded([&] {
    const dqc::IndexSpace sp = s->sys.space();
    if (a->t.space.n != sp.n || a->t.space.k != sp.k)
      throw dqc::Error(dqc::ErrorKind::InputShape, "advice index space does not match the system");
    if (sp.total() >= 60 || dqc::pow2(sp.total()) > budget)
      throw dqc::Error(dqc::ErrorKind::Budget,
                       "advice check needs 2^" + std::to_string(sp.total()) +
                           " pairs, budget is " + std::to_string(budget));
    uint64_t mismatches = 0;
    for (uint32_t v = 0; v < dqc::pow2(sp.total()); ++v) {
      dqc::Bits all = dqc::bits_of_index(v, sp.total());
      dqc::Bits x(all.begin(), all.begin() + sp.n);
      dqc::Transcript t{dqc::Bits(all.begin() + sp.n, all.end())};
      dqc::RunResult direct = dqc::run_verifier(*s->sys.verifier, x, t);
      auto [verdict, probes] = dqc::simulate_with_advice(a->t, x, t);
      if (verdict != direct.verdict || probes != direct.probes) ++mismatches;
    }
    dqc::Report r;
    r.set_bool("pass", mismatches == 0);
    r.set("pairs", dqc::pow2(sp.total()));
    r.set("mismatches", mismatches);
    r.set("rows", static_cast<uint64_t>(a->t.rows()));
    *out = new dqc_report{std::move(r)};
  });
}

void dqc_advice_free(dqc_advice* a) { delete a; }

/* -- Randomized verifiers ------------------------------------------------- */

dqc_status dqc_rv_load(const char* path, dqc_rverifier** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return guarded([&] { *out = new dqc_rverifier{dqc::load_rverifier(path)}; });
}

dqc_status dqc_rv_save(const dqc_rverifier* rv, const char* path) {
  if (auto st = require(rv && path, "null argument")) return st;
  return guarded([&] { dqc::save_rverifier(rv->rv, path); });
}

dqc_status dqc_rv_exact_mix(const dqc_system* s, dqc_rverifier** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = new dqc_rverifier{dqc::exact_mix_verifier(s->sys)}; });
}

int dqc_rv_q(const dqc_rverifier* rv) { return rv ? rv->rv.q() : 0; }

dqc_status dqc_rv_error(const dqc_rverifier* rv, const dqc_system* s, const dqc_boolfn* f,
                        uint64_t budget, dqc_report** out) {
  if (auto st = require(rv && s && f && out, "null argument")) return st;
  return guarded([&] {
    dqc::RvErrorReport rep = dqc::rv_error(rv->rv, s->sys, f->fn, budget);
    dqc::Report r;
    r.set("max_error", rep.max_error.to_string());
    r.set("pairs", rep.pairs);
    *out = new dqc_report{std::move(r)};
  });
}

void dqc_rv_free(dqc_rverifier* rv) { delete rv; }

/* -- Theorem pipelines ---------------------------------------------------- */

dqc_status dqc_yao_run(const dqc_system* s, const dqc_boolfn* f, const dqc_tree* t,
                       dqc_report** out) {
  if (auto st = require(s && f && t && out, "null argument")) return st;
  return guarded([&] {
    dqc::HardDistribution d = dqc::build_yao_distribution(s->sys, f->fn);
    dqc::PairingResult res = dqc::pairing_error_bound(t->t, d);
    dqc::Report r;
    r.set("atoms", static_cast<uint64_t>(d.atoms.size()));
    r.set("tree_depth", t->t.depth());
    r.set("measured_error", res.measured_error.to_string());
    r.set("certified_lower_bound", res.certified_lower_bound.to_string());
    r.set("forced_pairs", res.forced_pairs);
    r.set("distinct_x_probed", res.distinct_x_probed);
    r.set_bool("measured_ge_certified", !(res.measured_error < res.certified_lower_bound));
    *out = new dqc_report{std::move(r)};
  });
}

dqc_status dqc_newman_run(const dqc_rverifier* rv, const dqc_system* s, const dqc_boolfn* f,
                          uint64_t seed, uint64_t budget, dqc_report** out,
                          dqc_system** system_out, dqc_circuit** cv_out) {
  if (auto st = require(rv && s && f && out, "null argument")) return st;
  return guarded([&] {
    dqc::NewmanResult res = dqc::newman_derandomize(rv->rv, s->sys, f->fn, seed, budget);
    dqc::Report r;
    r.set("t", res.t);
    r.set("t_odd", res.t_odd);
    r.set("attempts", res.attempts);
    r.set("q", res.q);
    r.set("m", res.m);
    r.set("per_tree_max_size", res.per_tree_max_size);
    r.set("final_probe_bound", res.final_probe_bound);
    r.set("c_impl", res.c_impl);
    r.set_bool("c_impl_within_10", res.c_impl <= 10);
    r.set("pairs_checked", res.pairs_checked);
    *out = new dqc_report{std::move(r)};
    if (cv_out) *cv_out = new dqc_circuit{res.cv};
    if (system_out) *system_out = new dqc_system{std::move(res.system)};
  });
}

/* -- Toy machines --------------------------------------------------------- */

dqc_status dqc_machine_open(const char* spec, int horizon_t, dqc_machine** out) {
  if (auto st = require(spec && out, "null argument")) return st;
  return guarded([&] {
    std::string sp = spec;
    if (sp.rfind("builtin:", 0) == 0) {
      *out = new dqc_machine{
          std::make_shared<dqc::ToyMachine>(dqc::ToyMachine::builtin(sp.substr(8), horizon_t))};
    } else {
      *out = new dqc_machine{
          std::make_shared<dqc::ToyMachine>(dqc::machine_from_arg(sp, horizon_t))};
    }
  });
}

dqc_status dqc_machine_save(const dqc_machine* m, const char* path) {
  if (auto st = require(m && path, "null argument")) return st;
  return guarded([&] { dqc::save_machine(*m->m, path); });
}

dqc_status dqc_machine_run(const dqc_machine* m, const char* x, char* final_config, size_t cap,
                           int* accept_bit) {
  if (auto st = require(m && x && final_config && accept_bit, "null argument")) return st;
  return guarded([&] {
    dqc::MachineRun r = dqc::machine_run(*m->m, bits_arg(x, m->m->n));
    copy_bits(r.final_config, final_config, cap);
    *accept_bit = r.accept_bit;
  });
}

dqc_status dqc_machine_truth_table(const dqc_machine* m, dqc_boolfn** out) {
  if (auto st = require(m && out, "null argument")) return st;
  return guarded([&] { *out = new dqc_boolfn{dqc::machine_truth_table(*m->m)}; });
}

dqc_status dqc_machine_bisection(const dqc_machine* m, uint64_t budget, dqc_system** out) {
  if (auto st = require(m && out, "null argument")) return st;
  return guarded([&] { *out = new dqc_system{dqc::build_bisection_debate(m->m, budget)}; });
}

dqc_status dqc_pspace_pipeline(const dqc_machine* m, uint64_t budget, dqc_report** out,
                               dqc_system** system_out, dqc_circuit** cv_out) {
  if (auto st = require(m && out, "null argument")) return st;
  return guarded([&] {
    dqc::PspaceResult res = dqc::pspace_pipeline(m->m, budget);
    dqc::Report r;
    r.set("w", m->m->w);
    r.set("T", m->m->horizon_t);
    r.set("m", res.m);
    r.set("b", res.b);
    r.set("uncompiled_max_probes", res.uncompiled_max_probes);
    r.set("compiled_probe_bound", res.compiled_probe_bound);
    r.set("pairs_checked", res.pairs_checked);
    *out = new dqc_report{std::move(r)};
    if (cv_out) *cv_out = new dqc_circuit{res.cv};
    if (system_out) *system_out = new dqc_system{std::move(res.system)};
  });
}

void dqc_machine_free(dqc_machine* m) { delete m; }

/* -- Reports -------------------------------------------------------------- */

int dqc_report_count(const dqc_report* r) {
  return r ? static_cast<int>(r->r.entries().size()) : 0;
}

const char* dqc_report_key(const dqc_report* r, int i) {
  if (!r || i < 0 || i >= dqc_report_count(r)) return nullptr;
  return r->r.entries()[i].first.c_str();
}

const char* dqc_report_value(const dqc_report* r, int i) {
  if (!r || i < 0 || i >= dqc_report_count(r)) return nullptr;
  return r->r.entries()[i].second.c_str();
}

const char* dqc_report_get(const dqc_report* r, const char* key) {
  if (!r || !key) return nullptr;
  for (const auto& [k, v] : r->r.entries())
    if (k == key) return v.c_str();
  return nullptr;
}

void dqc_report_free(dqc_report* r) { delete r; }

}  // extern "C"
