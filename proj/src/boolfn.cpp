// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#include "dqc/boolfn.hpp"

#include <sstream>

namespace dqc {

namespace {

int popcount32(uint32_t v) { return __builtin_popcount(v); }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BoolFn::BoolFn(int n, Bits table, std::string label)
    : n_(n), table_(std::move(table)), label_(std::move(label)) {
  if (n_ < 1 || n_ > 20)
    throw Error(ErrorKind::InputShape, "BoolFn requires 1 <= n <= 20, got n=" + std::to_string(n_));
  if (table_.size() != pow2(n_))
    throw Error(ErrorKind::InputShape,
                "truth table for n=" + std::to_string(n_) + " must have " +
                    std::to_string(pow2(n_)) + " entries, got " + std::to_string(table_.size()));
  for (uint8_t b : table_)
    if (b > 1) throw Error(ErrorKind::InputShape, "truth table entries must be 0/1");
}

BoolFn BoolFn::builtin(const std::string& name, int n) {
  if (n < 1 || n > 20)
    throw Error(ErrorKind::InputShape, "builtin function requires 1 <= n <= 20");
  const uint32_t size = static_cast<uint32_t>(pow2(n));
  Bits table(size, 0);
  const uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
  for (uint32_t v = 0; v < size; ++v) {
    uint8_t bit;
    if (name == "and")
      bit = (v == full) ? 1 : 0;
    else if (name == "or")
      bit = (v != 0) ? 1 : 0;
    else if (name == "parity")
      bit = static_cast<uint8_t>(popcount32(v) & 1);
    else if (name == "majority")
      bit = (popcount32(v) * 2 > n) ? 1 : 0;
    else if (name == "const0")
      bit = 0;
    else if (name == "const1")
      bit = 1;
    else
      throw Error(ErrorKind::Parse, "unknown builtin function '" + name + "'");
    table[v] = bit;
  }
  return BoolFn(n, std::move(table), name + ":" + std::to_string(n));
}

BoolFn BoolFn::builtin_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorKind::Parse, "function spec must be name:n, got '" + spec + "'");
  const std::string name = spec.substr(0, colon);
  int n = 0;
  try {
    n = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "bad variable count in function spec '" + spec + "'");
  }
  return builtin(name, n);
}

BoolFn BoolFn::from_table_line(const std::string& line, std::string label) {
  std::istringstream in(line);
  int n = 0;
  std::string hex;
  if (!(in >> n >> hex))
    throw Error(ErrorKind::Parse, "truth table line must be '<n> <hex>'");
  if (n < 1 || n > 20) throw Error(ErrorKind::Parse, "truth table n out of range [1,20]");
  const uint32_t bits = static_cast<uint32_t>(pow2(n));
  const size_t digits = (bits + 3) / 4;
  if (hex.size() != digits)
    throw Error(ErrorKind::Parse, "truth table for n=" + std::to_string(n) + " needs " +
                                      std::to_string(digits) + " hex digits, got " +
                                      std::to_string(hex.size()));
  Bits table(bits, 0);
  for (uint32_t i = 0; i < bits; ++i) {
    int d = hex_value(hex[i / 4]);
    if (d < 0) throw Error(ErrorKind::Parse, "bad hex digit in truth table");
    table[i] = static_cast<uint8_t>((d >> (3 - (i % 4))) & 1);
  }
  return BoolFn(n, std::move(table), std::move(label));
}

std::string BoolFn::to_table_line() const {
  const uint32_t bits = static_cast<uint32_t>(table_.size());
  std::string hex((bits + 3) / 4, '0');
  for (uint32_t i = 0; i < bits; ++i) {
    if (!table_[i]) continue;
    size_t d = i / 4;
    int cur = hex_value(hex[d]);
    cur |= 1 << (3 - (i % 4));
    hex[d] = "0123456789abcdef"[cur];
  }
  return std::to_string(n_) + " " + hex;
}

uint8_t BoolFn::eval(std::span<const uint8_t> x) const {
  if (static_cast<int>(x.size()) != n_)
    throw Error(ErrorKind::InputShape, "input has " + std::to_string(x.size()) +
                                           " bits, function expects " + std::to_string(n_));
  return table_[index_of_bits(x)];
}

bool BoolFn::depends_on(int i) const {
  if (i < 1 || i > n_)
    throw Error(ErrorKind::IndexRange, "variable index " + std::to_string(i) +
                                           " out of range [1," + std::to_string(n_) + "]");
  const uint32_t flip = 1u << (i - 1);
  const uint32_t size = static_cast<uint32_t>(table_.size());
  for (uint32_t v = 0; v < size; ++v)
    if (table_[v] != table_[v ^ flip]) return true;
  return false;
}

bool BoolFn::depends_on_all() const {
  for (int i = 1; i <= n_; ++i)
    if (!depends_on(i)) return false;
  return true;
}

WitnessPair BoolFn::witness_pair(int i) const {
  if (i < 1 || i > n_)
    throw Error(ErrorKind::IndexRange, "variable index " + std::to_string(i) +
                                           " out of range [1," + std::to_string(n_) + "]");
  const uint32_t flip = 1u << (i - 1);
  const uint32_t size = static_cast<uint32_t>(table_.size());
  // Scan in lexicographic order of the bit string (x_1,..,x_n): enumerate the
  // string read as an MSB-first number and convert to the table encoding.
  for (uint32_t lex = 0; lex < size; ++lex) {
    uint32_t v = 0;
    for (int b = 0; b < n_; ++b)
      if ((lex >> (n_ - 1 - b)) & 1u) v |= 1u << b;
    if (table_[v] == 0 && table_[v ^ flip] == 1)
      return WitnessPair{i, bits_of_index(v, n_), bits_of_index(v ^ flip, n_)};
  }
  throw Error(ErrorKind::NoWitness,
              label_ + " does not depend on variable " + std::to_string(i));
}

}  // namespace dqc
