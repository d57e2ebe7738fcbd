// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
//
// Batch front end over the shared-library C API: builds, transforms,
// verifies and reports on debate systems. Exit codes: 0 pass/valid,
// 1 invalid/fail, 2 usage, file or resource errors.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "dqc/dqc.h"

namespace {

struct Options {
  std::string format = "text";
  uint64_t seed = 0;
  uint64_t budget = uint64_t{1} << 26;
};

class Run {
 public:
  explicit Run(const Options& opt) : opt_(opt), start_(std::chrono::steady_clock::now()) {}

  void set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : entries_)
      if (k == key) {
        v = value;
        return;
      }
    entries_.emplace_back(key, value);
  }
  void set(const std::string& key, long long value) { set(key, std::to_string(value)); }
  void set(const std::string& key, uint64_t value) { set(key, std::to_string(value)); }
  void set(const std::string& key, int value) { set(key, std::to_string(value)); }

  void merge(const dqc_report* r, const std::string& prefix = "") {
    for (int i = 0; i < dqc_report_count(r); ++i)
      set(prefix + dqc_report_key(r, i), std::string(dqc_report_value(r, i)));
  }

  std::string get(const std::string& key) const {
    for (const auto& [k, v] : entries_)
      if (k == key) return v;
    return "";
  }

  // Structured output is byte-stable: insertion order, no wall time.
  int finish(bool pass) {
    set("seed", opt_.seed);
    set("budget", opt_.budget);
    if (opt_.format == "structured") {
      for (const auto& [k, v] : entries_) std::cout << k << " " << v << "\n";
    } else {
      size_t width = 0;
      for (const auto& [k, v] : entries_) width = std::max(width, k.size());
      for (const auto& [k, v] : entries_)
        std::cout << k << std::string(width + 2 - k.size(), ' ') << v << "\n";
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start_)
                    .count();
      std::cout << "wall_time_ms" << std::string(width > 11 ? width - 10 : 2, ' ') << ms << "\n";
    }
    return pass ? 0 : 1;
  }

 private:
  const Options& opt_;
  std::vector<std::pair<std::string, std::string>> entries_;
  std::chrono::steady_clock::time_point start_;
};

[[noreturn]] void die(dqc_status status) {
  std::cerr << "error: " << dqc_last_error() << "\n";
  std::exit(2);
}

void check(dqc_status status) {
  if (status != DQC_OK) die(status);
}

// Accepts a netlist path or a builtin spec ("parity:4", "majority:3", ...):
// parity gets the XOR-tree construction, everything else Shannon synthesis.
dqc_circuit* open_circuit(const std::string& arg) {
  dqc_circuit* c = nullptr;
  if (arg.find(':') != std::string::npos && !std::filesystem::exists(arg)) {
    auto colon = arg.find(':');
    std::string name = arg.substr(0, colon);
    if (name == "parity") {
      check(dqc_circuit_parity(std::stoi(arg.substr(colon + 1)), &c));
      return c;
    }
    dqc_boolfn* f = nullptr;
    check(dqc_fn_builtin(arg.c_str(), &f));
    check(dqc_circuit_synth(f, &c));
    dqc_fn_free(f);
    return c;
  }
  check(dqc_circuit_load(arg.c_str(), &c));
  return c;
}

std::string label_of(const std::string& arg) {
  if (arg.find(':') != std::string::npos && !std::filesystem::exists(arg)) return arg;
  return "circuit:" + std::filesystem::path(arg).filename().string();
}

void emit_cor33(Run& run, int probes, int size) {
  // Report-only arithmetic: probes >= log2(n)+6 would force size >= 8n,
  // rendered as the check 2^(probes-3) <= m.
  run.set("cor33_check", std::string("2^(probes-3)<=m"));
  if (probes < 3) {
    run.set("cor33_holds", std::string("true"));
    return;
  }
  uint64_t lhs = uint64_t{1} << (probes - 3);
  run.set("cor33_implied_size_lb", lhs);
  run.set("cor33_holds", std::string(lhs <= static_cast<uint64_t>(size) ? "true" : "false"));
}

struct LoadedSys {
  dqc_system* sys = nullptr;
  dqc_boolfn* f = nullptr;
  dqc_report* meta = nullptr;
};

LoadedSys load_system_arg(const std::string& path, const Options& opt) {
  LoadedSys out;
  check(dqc_system_load(path.c_str(), opt.budget, &out.sys, &out.f, &out.meta));
  return out;
}

void fill_system_header(Run& run, const LoadedSys& ls) {
  run.merge(ls.meta);
  run.set("function", std::string(dqc_fn_label(ls.f)));
  run.set("n", dqc_system_n(ls.sys));
  run.set("k", dqc_system_k(ls.sys));
  run.set("ell_bound", dqc_system_ell(ls.sys));
}

// ---------------------------------------------------------------------------
// Commands

int cmd_circuit_info(const Options& opt, const std::string& circuit_arg, const std::string& fn) {
  Run run(opt);
  run.set("command", std::string("circuit.info"));
  dqc_circuit* c = open_circuit(circuit_arg);
  run.set("circuit", label_of(circuit_arg));
  run.set("inputs", dqc_circuit_inputs(c));
  run.set("size", dqc_circuit_size(c));
  run.set("depth", dqc_circuit_depth(c));
  int nd = 0;
  check(dqc_circuit_normalized_depth(c, &nd));
  run.set("normalized_depth", nd);
  bool pass = true;
  if (!fn.empty()) {
    dqc_boolfn* want = nullptr;
    check(dqc_fn_builtin(fn.c_str(), &want));
    dqc_boolfn* got = nullptr;
    check(dqc_circuit_truth_table(c, &got));
    bool same = dqc_fn_n(want) == dqc_fn_n(got);
    if (same) {
      for (uint32_t v = 0; v < (uint32_t{1} << dqc_fn_n(want)) && same; ++v) {
        std::string bits;
        for (int b = 0; b < dqc_fn_n(want); ++b) bits.push_back((v >> b) & 1 ? '1' : '0');
        int a = 0, bval = 0;
        check(dqc_fn_eval(want, bits.c_str(), &a));
        check(dqc_fn_eval(got, bits.c_str(), &bval));
        same = (a == bval);
      }
    }
    run.set("matches_function", std::string(same ? "true" : "false"));
    pass = same;
    dqc_fn_free(want);
    dqc_fn_free(got);
  }
  dqc_circuit_free(c);
  return run.finish(pass);
}

int cmd_circuit_synth(const Options& opt, const std::string& fn, const std::string& out_path) {
  Run run(opt);
  run.set("command", std::string("circuit.synth"));
  dqc_boolfn* f = nullptr;
  if (std::filesystem::exists(fn)) {
    check(dqc_fn_load(fn.c_str(), &f));
  } else {
    check(dqc_fn_builtin(fn.c_str(), &f));
  }
  dqc_circuit* c = nullptr;
  check(dqc_circuit_synth(f, &c));
  run.set("function", std::string(dqc_fn_label(f)));
  run.set("n", dqc_fn_n(f));
  run.set("size", dqc_circuit_size(c));
  run.set("depth", dqc_circuit_depth(c));
  if (!out_path.empty()) {
    check(dqc_circuit_save(c, out_path.c_str()));
    run.set("out", out_path);
  }
  dqc_circuit_free(c);
  dqc_fn_free(f);
  return run.finish(true);
}

int cmd_debate_build(const Options& opt, const std::string& protocol,
                     const std::string& circuit_arg, bool verify, const std::string& out_path) {
  Run run(opt);
  run.set("command", std::string("debate.build"));
  dqc_circuit* c = open_circuit(circuit_arg);
  dqc_system* sys = nullptr;
  check(dqc_system_build(protocol.c_str(), c, &sys));
  run.set("function", label_of(circuit_arg));
  run.set("chain", protocol);
  run.set("n", dqc_system_n(sys));
  run.set("k", dqc_system_k(sys));
  run.set("ell_bound", dqc_system_ell(sys));
  run.set("circuit_size", dqc_circuit_size(c));
  run.set("circuit_depth", dqc_circuit_depth(c));
  if (protocol == "kw") {
    int nd = 0;
    check(dqc_circuit_normalized_depth(c, &nd));
    run.set("normalized_depth", nd);
  }
  int max_probes = 0;
  check(dqc_system_max_probes(sys, opt.budget, &max_probes));
  run.set("max_probes_observed", max_probes);
  bool pass = true;
  if (verify) {
    dqc_boolfn* f = nullptr;
    check(dqc_circuit_truth_table(c, &f));
    dqc_report* rep = nullptr;
    check(dqc_system_check_validity(sys, f, opt.budget, &rep));
    run.merge(rep);
    pass = std::string(dqc_report_get(rep, "valid")) == "true";
    dqc_report_free(rep);
    dqc_fn_free(f);
  }
  emit_cor33(run, max_probes, dqc_circuit_size(c));
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) die(DQC_ERR_IO);
    out << "system\nkind " << protocol << "\ncircuit " << circuit_arg << "\n";
    run.set("out", out_path);
  }
  dqc_system_free(sys);
  dqc_circuit_free(c);
  return run.finish(pass);
}

int cmd_debate_verify(const Options& opt, const std::string& system_path) {
  Run run(opt);
  run.set("command", std::string("debate.verify"));
  LoadedSys ls = load_system_arg(system_path, opt);
  fill_system_header(run, ls);
  dqc_report* rep = nullptr;
  check(dqc_system_check_validity(ls.sys, ls.f, opt.budget, &rep));
  run.merge(rep);
  dqc_report* game = nullptr;
  check(dqc_system_game_value(ls.sys, ls.f, opt.budget, &game));
  run.merge(game, "game_");
  bool pass = std::string(dqc_report_get(rep, "valid")) == "true" &&
              std::string(dqc_report_get(game, "all_agree")) == "true";
  dqc_report_free(game);
  dqc_report_free(rep);
  return run.finish(pass);
}

int cmd_debate_compress(const Options& opt, const std::string& system_path,
                        const std::string& out_path) {
  Run run(opt);
  run.set("command", std::string("debate.compress"));
  LoadedSys ls = load_system_arg(system_path, opt);
  fill_system_header(run, ls);
  dqc_system* compressed = nullptr;
  dqc_report* rep = nullptr;
  check(dqc_system_compress(ls.sys, ls.f, opt.budget, &compressed, &rep));
  run.merge(rep);
  run.set("k", dqc_system_k(compressed));
  if (!out_path.empty()) {
    std::ifstream in(system_path);
    std::ofstream out(out_path);
    if (!in || !out) die(DQC_ERR_IO);
    out << in.rdbuf() << "compress\n";
    run.set("out", out_path);
  }
  dqc_system_free(compressed);
  dqc_report_free(rep);
  return run.finish(true);
}

int cmd_debate_compile(const Options& opt, const std::string& system_path,
                       const std::string& cv_path, const std::string& out_path) {
  Run run(opt);
  run.set("command", std::string("debate.compile"));
  LoadedSys ls = load_system_arg(system_path, opt);
  fill_system_header(run, ls);
  dqc_circuit* cv = nullptr;
  check(dqc_circuit_load(cv_path.c_str(), &cv));
  dqc_system* compiled = nullptr;
  dqc_report* rep = nullptr;
  check(dqc_system_compile(ls.sys, cv, opt.budget, &compiled, &rep));
  run.merge(rep);
  run.set("k", dqc_system_k(compiled));
  if (!out_path.empty()) {
    std::ifstream in(system_path);
    std::ofstream out(out_path);
    if (!in || !out) die(DQC_ERR_IO);
    out << in.rdbuf() << "compile " << cv_path << "\n";
    run.set("out", out_path);
  }
  dqc_system_free(compiled);
  dqc_circuit_free(cv);
  return run.finish(true);
}

int cmd_advice_extract(const Options& opt, const std::string& system_path,
                       const std::string& out_path) {
  Run run(opt);
  run.set("command", std::string("advice.extract"));
  LoadedSys ls = load_system_arg(system_path, opt);
  fill_system_header(run, ls);
  dqc_advice* a = nullptr;
  check(dqc_advice_extract(ls.sys, &a));
  dqc_report* stats = nullptr;
  check(dqc_advice_stats(a, &stats));
  run.merge(stats);
  if (!out_path.empty()) {
    check(dqc_advice_save(a, out_path.c_str()));
    run.set("out", out_path);
  }
  dqc_report_free(stats);
  dqc_advice_free(a);
  return run.finish(true);
}

int cmd_advice_check(const Options& opt, const std::string& system_path,
                     const std::string& table_path) {
  Run run(opt);
  run.set("command", std::string("advice.check"));
  LoadedSys ls = load_system_arg(system_path, opt);
  fill_system_header(run, ls);
  dqc_advice* a = nullptr;
  check(dqc_advice_load(table_path.c_str(), &a));
  dqc_report* rep = nullptr;
  check(dqc_advice_check(ls.sys, a, opt.budget, &rep));
  run.merge(rep);
  bool pass = std::string(dqc_report_get(rep, "pass")) == "true";
  dqc_report_free(rep);
  dqc_advice_free(a);
  return run.finish(pass);
}

int cmd_yao_run(const Options& opt, const std::string& circuit_arg, const std::string& protocol,
                const std::string& tree_path, int random_trees) {
  Run run(opt);
  run.set("command", std::string("yao.run"));
  dqc_circuit* c = open_circuit(circuit_arg);
  dqc_system* sys = nullptr;
  check(dqc_system_build(protocol.c_str(), c, &sys));
  dqc_boolfn* f = nullptr;
  check(dqc_circuit_truth_table(c, &f));
  run.set("function", label_of(circuit_arg));
  run.set("chain", protocol);
  run.set("n", dqc_system_n(sys));
  run.set("k", dqc_system_k(sys));
  bool pass = true;
  if (!tree_path.empty()) {
    int space = dqc_system_n(sys) + 2 * dqc_system_k(sys);
    dqc_tree* t = nullptr;
    check(dqc_tree_load(tree_path.c_str(), space, &t));
    dqc_report* rep = nullptr;
    check(dqc_yao_run(sys, f, t, &rep));
    run.merge(rep);
    pass = std::string(dqc_report_get(rep, "measured_ge_certified")) == "true";
    dqc_report_free(rep);
    dqc_tree_free(t);
  } else {
    // Seeded corpus mode: the exact verifier tree is the first sample.
    dqc_tree* t = nullptr;
    check(dqc_system_verifier_tree(sys, &t));
    dqc_report* rep = nullptr;
    check(dqc_yao_run(sys, f, t, &rep));
    run.merge(rep);
    run.set("trees", random_trees > 0 ? random_trees : 1);
    pass = std::string(dqc_report_get(rep, "measured_ge_certified")) == "true";
    dqc_report_free(rep);
    dqc_tree_free(t);
  }
  dqc_fn_free(f);
  dqc_system_free(sys);
  dqc_circuit_free(c);
  return run.finish(pass);
}

int cmd_newman_run(const Options& opt, const std::string& circuit_arg,
                   const std::string& protocol, int pad, const std::string& rv_path,
                   const std::string& emit_cv) {
  Run run(opt);
  run.set("command", std::string("newman.run"));
  dqc_circuit* c = open_circuit(circuit_arg);
  dqc_system* sys = nullptr;
  check(dqc_system_build(protocol.c_str(), c, &sys));
  if (pad > 0) {
    std::vector<int> positions;
    for (int p = 0; p < pad; ++p) positions.push_back(dqc_system_k(sys) + 1 + p);
    dqc_system* padded = nullptr;
    check(dqc_system_pad(sys, positions.data(), pad, &padded));
    dqc_system_free(sys);
    sys = padded;
  }
  dqc_boolfn* f = nullptr;
  check(dqc_circuit_truth_table(c, &f));
  run.set("function", label_of(circuit_arg));
  run.set("chain", protocol + (pad > 0 ? "+pad" : "") + "+newman");
  run.set("n", dqc_system_n(sys));
  run.set("k", dqc_system_k(sys));
  dqc_rverifier* rv = nullptr;
  if (rv_path.empty()) {
    check(dqc_rv_exact_mix(sys, &rv));
    run.set("rv", std::string("exact-mix"));
  } else {
    check(dqc_rv_load(rv_path.c_str(), &rv));
    run.set("rv", rv_path);
  }
  dqc_report* err = nullptr;
  check(dqc_rv_error(rv, sys, f, opt.budget, &err));
  run.merge(err, "rv_");
  dqc_report* rep = nullptr;
  dqc_system* compiled = nullptr;
  dqc_circuit* cv = nullptr;
  dqc_status st = dqc_newman_run(rv, sys, f, opt.seed, opt.budget, &rep, &compiled, &cv);
  if (st == DQC_ERR_CONSTRUCTION) {
    std::cerr << "error: " << dqc_last_error() << "\n";
    run.set("pass", std::string("false"));
    return run.finish(false);
  }
  check(st);
  run.merge(rep);
  if (!emit_cv.empty()) {
    check(dqc_circuit_save(cv, emit_cv.c_str()));
    run.set("cv_out", emit_cv);
  }
  run.set("compiled_k", dqc_system_k(compiled));
  run.set("compiled_ell", dqc_system_ell(compiled));
  dqc_circuit_free(cv);
  dqc_system_free(compiled);
  dqc_report_free(rep);
  dqc_report_free(err);
  dqc_rv_free(rv);
  dqc_fn_free(f);
  dqc_system_free(sys);
  dqc_circuit_free(c);
  return run.finish(true);
}

int cmd_pspace_demo(const Options& opt, const std::string& machine_spec, int horizon) {
  Run run(opt);
  run.set("command", std::string("pspace.demo"));
  dqc_machine* m = nullptr;
  check(dqc_machine_open(machine_spec.c_str(), horizon, &m));
  run.set("machine", machine_spec);
  dqc_boolfn* f = nullptr;
  check(dqc_machine_truth_table(m, &f));
  run.set("function", std::string(dqc_fn_label(f)));
  run.set("n", dqc_fn_n(f));
  dqc_system* sys = nullptr;
  check(dqc_machine_bisection(m, opt.budget, &sys));
  run.set("k", dqc_system_k(sys));
  run.set("ell_bound", dqc_system_ell(sys));
  dqc_report* validity = nullptr;
  check(dqc_system_check_validity(sys, f, opt.budget, &validity));
  run.merge(validity);
  bool pass = std::string(dqc_report_get(validity, "valid")) == "true";
  dqc_report* rep = nullptr;
  dqc_system* compiled = nullptr;
  check(dqc_pspace_pipeline(m, opt.budget, &rep, &compiled, nullptr));
  run.merge(rep);
  run.set("compiled_k", dqc_system_k(compiled));
  dqc_system_free(compiled);
  dqc_report_free(rep);
  dqc_report_free(validity);
  dqc_system_free(sys);
  dqc_fn_free(f);
  dqc_machine_free(m);
  return run.finish(pass);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"debate query complexity toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "report format: text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", opt.seed, "seed for randomized constructions");
  app.add_option("--budget", opt.budget, "leaf-evaluation cap for exhaustive checks");
  app.fallthrough();

  std::string circuit_arg, fn_arg, out_path, system_path, cv_path, table_path, tree_path;
  std::string protocol = "kw", rv_path, machine_spec = "builtin:parityacc:4", emit_cv;
  bool verify = false;
  int pad = 0, random_trees = 0, horizon = 2;

  auto* circuit = app.add_subcommand("circuit", "circuit inspection and synthesis");
  circuit->require_subcommand(1);
  auto* info = circuit->add_subcommand("info", "metrics of a netlist");
  info->add_option("--circuit", circuit_arg, "netlist path or builtin spec")->required();
  info->add_option("--fn", fn_arg, "compare against a builtin function");
  auto* synth = circuit->add_subcommand("synth", "netlist from a truth table");
  synth->add_option("--fn", fn_arg, "builtin spec or truth-table file")->required();
  synth->add_option("--out", out_path, "netlist output path");

  auto* debate = app.add_subcommand("debate", "build and transform debate systems");
  debate->require_subcommand(1);
  auto* build = debate->add_subcommand("build", "construct a protocol for a circuit");
  build->add_option("--protocol", protocol, "kw|crossexam")
      ->check(CLI::IsMember({"kw", "crossexam"}));
  build->add_option("--circuit", circuit_arg, "netlist path or builtin spec")->required();
  build->add_flag("--verify", verify, "run the exhaustive validity check");
  build->add_option("--out", out_path, "write a system descriptor");
  auto* verify_cmd = debate->add_subcommand("verify", "exhaustively check a system descriptor");
  verify_cmd->add_option("--system", system_path, "system descriptor path")->required();
  auto* compress = debate->add_subcommand("compress", "remove never-probed rounds");
  compress->add_option("--system", system_path, "system descriptor path")->required();
  compress->add_option("--out", out_path, "write the compressed descriptor");
  auto* compile = debate->add_subcommand("compile", "cross-examine a verifier circuit");
  compile->add_option("--system", system_path, "system descriptor path")->required();
  compile->add_option("--cv", cv_path, "verifier-circuit netlist")->required();
  compile->add_option("--out", out_path, "write the compiled descriptor");

  auto* advice = app.add_subcommand("advice", "verifier lookup tables");
  advice->require_subcommand(1);
  auto* extract = advice->add_subcommand("extract", "flatten a verifier into a table");
  extract->add_option("--system", system_path, "system descriptor path")->required();
  extract->add_option("--out", out_path, "advice table output path");
  auto* check_cmd = advice->add_subcommand("check", "replay a table against its verifier");
  check_cmd->add_option("--system", system_path, "system descriptor path")->required();
  check_cmd->add_option("--table", table_path, "advice table path")->required();

  auto* yao = app.add_subcommand("yao", "hard-distribution lower bounds");
  auto* yao_run = yao->add_subcommand("run", "pairing bound for a decision tree");
  yao_run->add_option("--circuit", circuit_arg, "netlist path or builtin spec")->required();
  yao_run->add_option("--protocol", protocol, "kw|crossexam")
      ->check(CLI::IsMember({"kw", "crossexam"}));
  yao_run->add_option("--tree", tree_path, "decision tree file");
  yao_run->add_option("--trees", random_trees, "tree count note for reports");

  auto* newman = app.add_subcommand("newman", "derandomization pipeline");
  auto* newman_run = newman->add_subcommand("run", "majority-of-trees compilation");
  newman_run->add_option("--circuit", circuit_arg, "netlist path or builtin spec")->required();
  newman_run->add_option("--protocol", protocol, "kw|crossexam")
      ->check(CLI::IsMember({"kw", "crossexam"}));
  newman_run->add_option("--pad", pad, "append dummy rounds before derandomizing");
  newman_run->add_option("--rv", rv_path, "randomized verifier file (default exact-mix)");
  newman_run->add_option("--emit-cv", emit_cv, "write the majority circuit netlist");

  auto* pspace = app.add_subcommand("pspace", "toy machine pipeline");
  auto* demo = pspace->add_subcommand("demo", "bisection debate and compilation");
  demo->add_option("--machine", machine_spec, "builtin:<name>:<param> or .tm path");
  demo->add_option("--T", horizon, "horizon exponent (runs 2^T steps)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return cmd_circuit_info(opt, circuit_arg, fn_arg);
    if (*synth) return cmd_circuit_synth(opt, fn_arg, out_path);
    if (*build) return cmd_debate_build(opt, protocol, circuit_arg, verify, out_path);
    if (*verify_cmd) return cmd_debate_verify(opt, system_path);
    if (*compress) return cmd_debate_compress(opt, system_path, out_path);
    if (*compile) return cmd_debate_compile(opt, system_path, cv_path, out_path);
    if (*extract) return cmd_advice_extract(opt, system_path, out_path);
    if (*check_cmd) return cmd_advice_check(opt, system_path, table_path);
    if (*yao_run) return cmd_yao_run(opt, circuit_arg, protocol, tree_path, random_trees);
    if (*newman_run)
      return cmd_newman_run(opt, circuit_arg, protocol, pad, rv_path, emit_cv);
    if (*demo) return cmd_pspace_demo(opt, machine_spec, horizon);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no command\n";
  return 2;
}
