// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "dqc/common.hpp"

namespace dqc {

// A pair of inputs differing exactly at `index`, with f(w)=0 and f(w_tilde)=1.
struct WitnessPair {
  int index = 0;  // 1-based variable position
  Bits w;
  Bits w_tilde;
};

// Boolean function as an explicit truth table. Table entry i is the value on
// the input whose x_1-lowest-order integer encoding is i. n is capped at 20.
class BoolFn {
 public:
  BoolFn(int n, Bits table, std::string label = "table");

  // Built-ins: and, or, parity, majority, const0, const1.
  // majority is strict: 1 iff popcount > n/2 (even-n ties give 0).
  static BoolFn builtin(const std::string& name, int n);

  // "name:n" form, e.g. "parity:4".
  static BoolFn builtin_spec(const std::string& spec);

  // One-line hex file format: "<n> <hex>", hex digit d covering table
  // indices 4d..4d+3 with index 4d in the digit's most significant bit.
  static BoolFn from_table_line(const std::string& line, std::string label = "table");
  std::string to_table_line() const;

  int n() const { return n_; }
  const Bits& table() const { return table_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  uint8_t eval(std::span<const uint8_t> x) const;
  uint8_t eval_index(uint32_t idx) const { return table_[idx]; }

  bool depends_on(int i) const;  // 1-based
  bool depends_on_all() const;

  // Deterministic witness for variable i: smallest w in lexicographic order
  // of (x_1,..,x_n). Throws NoWitness if f does not depend on i.
  WitnessPair witness_pair(int i) const;

  bool operator==(const BoolFn& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

 private:
  int n_;
  Bits table_;
  std::string label_;
};

}  // namespace dqc
