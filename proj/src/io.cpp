// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#include "dqc/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dqc/protocols.hpp"
#include "dqc/transforms.hpp"

namespace fs = std::filesystem;

namespace dqc {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write file '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorKind::Io, "write failed for '" + path + "'");
}

BoolFn load_function(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    return BoolFn::from_table_line(line, "file:" + fs::path(path).filename().string());
  }
  throw Error(ErrorKind::Parse, "truth table file '" + path + "' has no table line");
}

void save_function(const BoolFn& f, const std::string& path) {
  write_file(path, f.to_table_line() + "\n");
}

Circuit load_circuit(const std::string& path) { return Circuit::parse_netlist(read_file(path)); }

void save_circuit(const Circuit& c, const std::string& path) { write_file(path, c.to_netlist()); }

BoolFn function_from_arg(const std::string& arg) {
  if (arg.find(':') != std::string::npos && !fs::exists(arg)) return BoolFn::builtin_spec(arg);
  return load_function(arg);
}

DecisionTree load_tree(const std::string& path, int space_size) {
  return DecisionTree::parse(read_file(path), space_size);
}

void save_tree(const DecisionTree& t, const std::string& path) { write_file(path, t.serialize()); }

RandomizedVerifier load_rverifier(const std::string& path) {
  return RandomizedVerifier::parse(read_file(path));
}

void save_rverifier(const RandomizedVerifier& rv, const std::string& path) {
  write_file(path, rv.serialize());
}

AdviceTable load_advice(const std::string& path) { return AdviceTable::parse(read_file(path)); }

void save_advice(const AdviceTable& t, const std::string& path) { write_file(path, t.serialize()); }

// ---------------------------------------------------------------------------
// Machines

ToyMachine load_machine(const std::string& path) {
  const fs::path dir = fs::path(path).parent_path();
  std::istringstream in(read_file(path));
  std::string line;
  ToyMachine m;
  std::vector<std::pair<int, std::string>> step_paths;
  std::string accept_path;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    auto fail = [&](const std::string& msg) {
      return Error(ErrorKind::Parse, "machine line " + std::to_string(lineno) + ": " + msg);
    };
    if (kw == "machine") {
      continue;
    } else if (kw == "w") {
      if (!(ls >> m.w)) throw fail("w needs a value");
    } else if (kw == "n") {
      if (!(ls >> m.n)) throw fail("n needs a value");
    } else if (kw == "T") {
      if (!(ls >> m.horizon_t)) throw fail("T needs a value");
    } else if (kw == "init") {
      std::string tok;
      while (ls >> tok) {
        InitLit lit;
        if (tok == "0") {
          lit.kind = InitLit::Zero;
        } else if (tok == "1") {
          lit.kind = InitLit::One;
        } else if (tok[0] == 'x') {
          lit.kind = InitLit::Var;
          lit.var = std::stoi(tok.substr(1));
        } else if (tok[0] == '!' && tok.size() > 2 && tok[1] == 'x') {
          lit.kind = InitLit::NegVar;
          lit.var = std::stoi(tok.substr(2));
        } else {
          throw fail("bad init literal '" + tok + "'");
        }
        m.init.push_back(lit);
      }
    } else if (kw == "step") {
      int j;
      std::string p;
      if (!(ls >> j >> p)) throw fail("step <j> <netlist>");
      step_paths.emplace_back(j, p);
    } else if (kw == "accept") {
      if (!(ls >> accept_path)) throw fail("accept <netlist>");
    } else {
      throw fail("unknown record '" + kw + "'");
    }
  }
  if (m.w < 1) throw Error(ErrorKind::Parse, "machine file missing w");
  m.step.reserve(m.w);
  std::vector<std::optional<Circuit>> steps(m.w);
  for (auto& [j, p] : step_paths) {
    if (j < 1 || j > m.w) throw Error(ErrorKind::Parse, "step index out of range");
    steps[j - 1] = load_circuit((dir / p).string());
  }
  for (int j = 0; j < m.w; ++j) {
    if (!steps[j])
      throw Error(ErrorKind::Parse, "machine file missing step " + std::to_string(j + 1));
    m.step.push_back(*steps[j]);
  }
  if (accept_path.empty()) throw Error(ErrorKind::Parse, "machine file missing accept");
  m.accept_circuit = load_circuit((dir / accept_path).string());
  m.label = "file:" + fs::path(path).filename().string();
  m.validate();
  return m;
}

void save_machine(const ToyMachine& m, const std::string& path) {
  m.validate();
  const std::string stem = fs::path(path).filename().string();
  std::ostringstream out;
  out << "machine\n";
  out << "w " << m.w << "\n";
  out << "n " << m.n << "\n";
  out << "T " << m.horizon_t << "\n";
  out << "init";
  for (const InitLit& lit : m.init) {
    switch (lit.kind) {
      case InitLit::Zero: out << " 0"; break;
      case InitLit::One: out << " 1"; break;
      case InitLit::Var: out << " x" << lit.var; break;
      case InitLit::NegVar: out << " !x" << lit.var; break;
    }
  }
  out << "\n";
  for (int j = 1; j <= m.w; ++j) {
    std::string rel = stem + ".step" + std::to_string(j) + ".nl";
    save_circuit(m.step[j - 1], (fs::path(path).parent_path() / rel).string());
    out << "step " << j << " " << rel << "\n";
  }
  std::string rel = stem + ".accept.nl";
  save_circuit(m.accept(), (fs::path(path).parent_path() / rel).string());
  out << "accept " << rel << "\n";
  write_file(path, out.str());
}

ToyMachine machine_from_arg(const std::string& arg, int horizon_t) {
  if (arg.rfind("builtin:", 0) == 0) {
    if (horizon_t < 0)
      throw Error(ErrorKind::Parse, "builtin machines need an explicit horizon T");
    return ToyMachine::builtin(arg.substr(8), horizon_t);
  }
  ToyMachine m = load_machine(arg);
  if (horizon_t >= 0) m.horizon_t = horizon_t;
  m.validate();
  return m;
}

// ---------------------------------------------------------------------------
// System descriptors

std::string SystemSpec::serialize() const {
  std::ostringstream out;
  out << "system\n";
  out << "kind " << kind << "\n";
  if (!circuit_path.empty()) out << "circuit " << circuit_path << "\n";
  if (!machine_spec.empty()) out << "machine " << machine_spec << "\n";
  for (const TransformSpec& t : transforms) {
    if (t.op == "pad") {
      out << "pad";
      for (int p : t.positions) out << " " << p;
      out << "\n";
    } else if (t.op == "compress") {
      out << "compress\n";
    } else if (t.op == "compile") {
      out << "compile " << t.path << "\n";
    }
  }
  return out.str();
}

SystemSpec SystemSpec::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  SystemSpec spec;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    auto fail = [&](const std::string& msg) {
      return Error(ErrorKind::Parse, "system line " + std::to_string(lineno) + ": " + msg);
    };
    if (kw == "system") {
      continue;
    } else if (kw == "kind") {
      if (!(ls >> spec.kind)) throw fail("kind needs a value");
    } else if (kw == "circuit") {
      if (!(ls >> spec.circuit_path)) throw fail("circuit needs a path");
    } else if (kw == "machine") {
      if (!(ls >> spec.machine_spec)) throw fail("machine needs a path or builtin spec");
    } else if (kw == "pad") {
      SystemSpec::TransformSpec t;
      t.op = "pad";
      int pos;
      while (ls >> pos) t.positions.push_back(pos);
      if (t.positions.empty()) throw fail("pad needs at least one position");
      spec.transforms.push_back(std::move(t));
    } else if (kw == "compress") {
      spec.transforms.push_back(TransformSpec{"compress", {}, ""});
    } else if (kw == "compile") {
      SystemSpec::TransformSpec t;
      t.op = "compile";
      if (!(ls >> t.path)) throw fail("compile needs a verifier-circuit path");
      spec.transforms.push_back(std::move(t));
    } else {
      throw fail("unknown record '" + kw + "'");
    }
  }
  if (spec.kind.empty()) throw Error(ErrorKind::Parse, "system file missing kind");
  return spec;
}

LoadedSystem build_from_spec(const SystemSpec& spec, const std::string& base_dir, uint64_t budget) {
  const fs::path dir(base_dir);
  std::optional<DebateSystem> sys;
  std::optional<BoolFn> f;
  std::optional<int> circuit_size, circuit_depth, normalized_depth;
  std::string chain = spec.kind;

  if (spec.kind == "kw" || spec.kind == "crossexam") {
    if (spec.circuit_path.empty())
      throw Error(ErrorKind::Parse, "system kind " + spec.kind + " needs a circuit");
    auto circuit =
        std::make_shared<Circuit>(load_circuit((dir / spec.circuit_path).string()));
    f = circuit->truth_table("circuit:" + fs::path(spec.circuit_path).filename().string());
    circuit_size = circuit->size();
    circuit_depth = circuit->depth();
    if (spec.kind == "kw") {
      auto norm = std::make_shared<NormalizedCircuit>(NormalizedCircuit::normalize(*circuit));
      normalized_depth = norm->depth();
      sys = build_kw_debate(norm);
    } else {
      sys = build_crossexam_debate(circuit);
    }
  } else if (spec.kind == "bisection") {
    if (spec.machine_spec.empty())
      throw Error(ErrorKind::Parse, "system kind bisection needs a machine");
    ToyMachine m;
    if (spec.machine_spec.rfind("builtin:", 0) == 0) {
      // builtin:<name>:<param>:<T>
      auto last = spec.machine_spec.rfind(':');
      int t = std::stoi(spec.machine_spec.substr(last + 1));
      m = ToyMachine::builtin(spec.machine_spec.substr(8, last - 8), t);
    } else {
      m = load_machine((dir / spec.machine_spec).string());
    }
    auto mp = std::make_shared<ToyMachine>(std::move(m));
    f = machine_truth_table(*mp);
    sys = build_bisection_debate(mp, budget);
  } else {
    throw Error(ErrorKind::Parse, "unknown system kind '" + spec.kind + "'");
  }

  for (const auto& t : spec.transforms) {
    if (t.op == "pad") {
      sys = pad_rounds(*sys, t.positions);
      chain += "+pad";
    } else if (t.op == "compress") {
      CompressResult res = compress_rounds(*sys, &*f, budget);
      sys = std::move(res.system);
      chain += "+compress";
    } else if (t.op == "compile") {
      auto cv = std::make_shared<Circuit>(load_circuit((dir / t.path).string()));
      CompileResult res = crossexam_compile(*sys, cv, budget);
      sys = std::move(res.system);
      chain += "+compile";
    }
  }
  return LoadedSystem{std::move(*sys), std::move(*f), chain, circuit_size, circuit_depth,
                      normalized_depth};
}

LoadedSystem load_system(const std::string& path, uint64_t budget) {
  SystemSpec spec = SystemSpec::parse(read_file(path));
  return build_from_spec(spec, fs::path(path).parent_path().string(), budget);
}

void save_system_spec(const SystemSpec& spec, const std::string& path) {
  write_file(path, spec.serialize());
}

}  // namespace dqc
