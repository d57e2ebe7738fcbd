#include <doctest.h>

#include "dqc/boolfn.hpp"

using namespace dqc;

namespace {

// Independent oracle: XOR-fold a bit string by hand.
uint8_t fold_parity(const Bits& x) {
  uint8_t acc = 0;
  for (uint8_t b : x) acc ^= b;
  return acc;
}

// Independent witness oracle: scan strings (x_1..x_n) in lexicographic order.
WitnessPair brute_witness(const BoolFn& f, int i) {
  int n = f.n();
  for (uint32_t lex = 0; lex < pow2(n); ++lex) {
    Bits w(n);
    for (int b = 0; b < n; ++b) w[b] = (lex >> (n - 1 - b)) & 1;
    Bits wt = w;
    wt[i - 1] ^= 1;
    if (f.eval(w) == 0 && f.eval(wt) == 1) return WitnessPair{i, w, wt};
  }
  throw std::runtime_error("no witness");
}

}  // namespace

TEST_SUITE("boolfn") {

TEST_CASE("eval matches the named definitions") {
  BoolFn and2 = BoolFn::builtin("and", 2);
  CHECK(and2.table() == Bits{0, 0, 0, 1});
  CHECK(and2.eval(bits_from_string("11")) == 1);
  CHECK(and2.eval(bits_from_string("10")) == 0);

  BoolFn parity4 = BoolFn::builtin("parity", 4);
  Bits x = bits_from_string("0110");
  CHECK(parity4.eval(x) == fold_parity(x));
  CHECK(parity4.eval(x) == 0);
}

TEST_CASE("eval rejects wrong-shaped input") {
  BoolFn and2 = BoolFn::builtin("and", 2);
  CHECK_THROWS_AS(and2.eval(bits_from_string("101")), Error);
  try {
    and2.eval(bits_from_string("1"));
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InputShape);
  }
}

TEST_CASE("named builtins agree with independently built tables") {
  for (int n = 1; n <= 4; ++n) {
    BoolFn andn = BoolFn::builtin("and", n);
    BoolFn orn = BoolFn::builtin("or", n);
    BoolFn par = BoolFn::builtin("parity", n);
    BoolFn maj = BoolFn::builtin("majority", n);
    for (uint32_t v = 0; v < pow2(n); ++v) {
      Bits x = bits_of_index(v, n);
      int ones = 0;
      for (uint8_t b : x) ones += b;
      CHECK(andn.eval(x) == (ones == n ? 1 : 0));
      CHECK(orn.eval(x) == (ones > 0 ? 1 : 0));
      CHECK(par.eval(x) == fold_parity(x));
      CHECK(maj.eval(x) == (2 * ones > n ? 1 : 0));
    }
  }
}

TEST_CASE("depends_on by brute force") {
  CHECK(BoolFn::builtin("parity", 2).depends_on(1));
  CHECK_FALSE(BoolFn::builtin("const0", 2).depends_on(1));
  BoolFn maj3 = BoolFn::builtin("majority", 3);
  // Independent check over all 8 inputs.
  bool dep = false;
  for (uint32_t v = 0; v < 8; ++v) dep |= (maj3.eval_index(v) != maj3.eval_index(v ^ 4u));
  CHECK(dep);
  CHECK(maj3.depends_on(3) == dep);
  CHECK_THROWS_AS(maj3.depends_on(0), Error);
  CHECK_THROWS_AS(maj3.depends_on(4), Error);
}

TEST_CASE("witness pairs: frozen examples and the brute oracle") {
  BoolFn parity2 = BoolFn::builtin("parity", 2);
  WitnessPair wp = parity2.witness_pair(1);
  CHECK(bits_to_string(wp.w) == "00");
  CHECK(bits_to_string(wp.w_tilde) == "10");

  BoolFn and2 = BoolFn::builtin("and", 2);
  wp = and2.witness_pair(2);
  CHECK(bits_to_string(wp.w) == "10");
  CHECK(bits_to_string(wp.w_tilde) == "11");

  BoolFn maj3 = BoolFn::builtin("majority", 3);
  wp = maj3.witness_pair(1);
  CHECK(bits_to_string(wp.w) == "001");
  CHECK(bits_to_string(wp.w_tilde) == "101");

  // Oracle agreement everywhere it applies.
  for (const char* name : {"and", "or", "parity", "majority"}) {
    for (int n = 1; n <= 4; ++n) {
      BoolFn f = BoolFn::builtin(name, n);
      for (int i = 1; i <= n; ++i) {
        if (!f.depends_on(i)) continue;
        WitnessPair got = f.witness_pair(i);
        WitnessPair want = brute_witness(f, i);
        CHECK(got.w == want.w);
        CHECK(got.w_tilde == want.w_tilde);
        CHECK(f.eval(got.w) == 0);
        CHECK(f.eval(got.w_tilde) == 1);
        // Differ exactly at position i.
        for (int b = 1; b <= n; ++b)
          CHECK((got.w[b - 1] != got.w_tilde[b - 1]) == (b == i));
      }
    }
  }
}

TEST_CASE("witness_pair succeeds exactly when the function depends on i") {
  // Every function on n = 3: 256 tables.
  for (uint32_t mask = 0; mask < 256; ++mask) {
    Bits table(8);
    for (int v = 0; v < 8; ++v) table[v] = (mask >> v) & 1;
    BoolFn f(3, table);
    for (int i = 1; i <= 3; ++i) {
      if (f.depends_on(i)) {
        CHECK_NOTHROW(f.witness_pair(i));
      } else {
        CHECK_THROWS_AS(f.witness_pair(i), Error);
      }
    }
  }
}

TEST_CASE("fully dependent functions have witnesses at every position") {
  for (int n : {3, 4, 6}) {
    BoolFn f = BoolFn::builtin("parity", n);
    CHECK(f.depends_on_all());
    int count = 0;
    for (int i = 1; i <= n; ++i) {
      f.witness_pair(i);
      ++count;
    }
    CHECK(count == n);
  }
}

TEST_CASE("truth-table line round trip") {
  BoolFn parity4 = BoolFn::builtin("parity", 4);
  CHECK(parity4.to_table_line() == "4 6996");
  BoolFn back = BoolFn::from_table_line(parity4.to_table_line());
  CHECK(back == parity4);

  BoolFn and1 = BoolFn::builtin("and", 1);
  BoolFn b1 = BoolFn::from_table_line(and1.to_table_line());
  CHECK(b1 == and1);

  CHECK_THROWS_AS(BoolFn::from_table_line("4 69"), Error);      // short hex
  CHECK_THROWS_AS(BoolFn::from_table_line("0 0"), Error);       // n out of range
  CHECK_THROWS_AS(BoolFn::from_table_line("2 zz"), Error);      // bad digits
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(BoolFn(0, Bits{}), Error);
  CHECK_THROWS_AS(BoolFn(21, Bits{}), Error);
  CHECK_THROWS_AS(BoolFn(2, Bits{0, 1}), Error);       // wrong length
  CHECK_THROWS_AS(BoolFn(1, Bits{0, 2}), Error);       // non-bit entry
  CHECK_THROWS_AS(BoolFn::builtin("nand", 2), Error);  // unknown name
}

}  // TEST_SUITE
