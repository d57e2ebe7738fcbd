// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dqc {

enum class ErrorKind {
  InputShape,     // wrong bit-string length or arity
  IndexRange,     // variable/gate index out of range
  NoWitness,      // function does not depend on the requested variable
  Parse,          // malformed file or text
  Budget,         // exhaustive check would exceed the evaluation budget
  Precondition,   // operation precondition violated
  CorruptTable,   // advice table missing an entry
  Construction,   // probabilistic construction failed after retries
  Io,             // file not readable/writable
  Internal,       // invariant violation (implementation bug)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

using Bits = std::vector<uint8_t>;

// Bit-string conventions, used identically by every module:
// a string "b1 b2 .. bn" written left to right is (x_1, x_2, .., x_n);
// the truth-table index of x is sum x_i * 2^(i-1)  (x_1 = lowest-order bit).
inline Bits bits_from_string(const std::string& s) {
  Bits out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '0')
      out.push_back(0);
    else if (c == '1')
      out.push_back(1);
    else
      throw Error(ErrorKind::Parse, "bit string may contain only 0/1, got '" + s + "'");
  }
  return out;
}

inline std::string bits_to_string(std::span<const uint8_t> bits) {
  std::string s;
  s.reserve(bits.size());
  for (uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

inline uint32_t index_of_bits(std::span<const uint8_t> bits) {
  uint32_t idx = 0;
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) idx |= (1u << i);
  return idx;
}

inline Bits bits_of_index(uint32_t idx, int n) {
  Bits out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = (idx >> i) & 1u;
  return out;
}

// Smallest b >= 0 with 2^b >= m. ceil_log2(1) == 0.
inline int ceil_log2(uint64_t m) {
  int b = 0;
  while ((uint64_t{1} << b) < m) ++b;
  return b;
}

inline uint64_t pow2(int b) { return uint64_t{1} << b; }

// Seeded RNG for every randomized construction. mt19937_64 is fully specified
// by the standard, so identical seeds give identical streams everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Uniform in [0, bound) by rejection; avoids std::uniform_int_distribution,
  // whose output is implementation-defined.
  uint64_t below(uint64_t bound) {
    if (bound == 0) throw Error(ErrorKind::Internal, "Rng::below(0)");
    const uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    uint64_t v = eng_();
    while (v >= limit) v = eng_();
    return v % bound;
  }

  uint8_t bit() { return static_cast<uint8_t>(below(2)); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace dqc
