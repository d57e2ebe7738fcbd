// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "dqc/circuit.hpp"
#include "dqc/debate.hpp"
#include "dqc/pspace.hpp"
#include "dqc/randomized.hpp"

namespace dqc {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

BoolFn load_function(const std::string& path);
void save_function(const BoolFn& f, const std::string& path);

Circuit load_circuit(const std::string& path);
void save_circuit(const Circuit& c, const std::string& path);

// "name:n" builtin spec or a truth-table file path.
BoolFn function_from_arg(const std::string& arg);

DecisionTree load_tree(const std::string& path, int space_size);
void save_tree(const DecisionTree& t, const std::string& path);

RandomizedVerifier load_rverifier(const std::string& path);
void save_rverifier(const RandomizedVerifier& rv, const std::string& path);

AdviceTable load_advice(const std::string& path);
void save_advice(const AdviceTable& t, const std::string& path);

// Machine file: declares w/n/T, the init template, and netlist paths for the
// step and accept circuits (resolved relative to the machine file).
ToyMachine load_machine(const std::string& path);
// Writes the .tm plus sibling netlists "<path>.step<j>.nl" / "<path>.accept.nl".
void save_machine(const ToyMachine& m, const std::string& path);
// "builtin:<name>:<param>" or a .tm path; horizon overrides when >= 0.
ToyMachine machine_from_arg(const std::string& arg, int horizon_t);

// System descriptor: reconstructs the debate from its sources.
//   system
//   kind kw|crossexam|bisection
//   circuit <relpath>            (kw / crossexam)
//   machine <relpath-or-builtin> (bisection; builtin:<spec>:<T> allowed)
//   pad <pos>...                 transform lines, applied in order
//   compress
//   compile <cv-relpath>
struct SystemSpec {
  std::string kind;
  std::string circuit_path;  // as written in the file
  std::string machine_spec;
  struct TransformSpec {
    std::string op;  // pad | compress | compile
    std::vector<int> positions;
    std::string path;
  };
  std::vector<TransformSpec> transforms;

  std::string serialize() const;
  static SystemSpec parse(const std::string& text);
};

struct LoadedSystem {
  DebateSystem system;
  BoolFn f;  // ground truth derived from the source circuit/machine
  std::string chain;
  std::optional<int> circuit_size;
  std::optional<int> circuit_depth;
  std::optional<int> normalized_depth;
};

LoadedSystem build_from_spec(const SystemSpec& spec, const std::string& base_dir, uint64_t budget);
LoadedSystem load_system(const std::string& path, uint64_t budget);
void save_system_spec(const SystemSpec& spec, const std::string& path);

}  // namespace dqc
