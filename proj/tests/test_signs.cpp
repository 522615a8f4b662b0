#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sepr/error.hpp"

using namespace sepr;

namespace {

Symbol sym(const char* s) { return SeprSequence::parse(s)[0]; }

}  // namespace

TEST_CASE("symbol spelling round-trips") {
  for (Symbol s : kAllSymbols) CHECK(SeprSequence::parse(to_string(s))[0] == s);
  CHECK(SeprSequence::parse("NS-A+").str() == "NS-A+");
  CHECK(SeprSequence::parse("S*S*S*A-").size() == 4);
}

TEST_CASE("sequence parse errors carry the offset") {
  CHECK_THROWS_AS(SeprSequence::parse(""), ParseError);
  try {
    SeprSequence::parse("NA+X");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(SeprSequence::parse("NA"), ParseError);
  CHECK_THROWS_AS(SeprSequence::parse("S?"), ParseError);
}

TEST_CASE("addition and multiplication agree with the set semantics") {
  for (Symbol a : kAllSymbols)
    for (Symbol b : kAllSymbols) {
      CAPTURE(to_string(a));
      CAPTURE(to_string(b));
      CHECK(symbol_add(a, b) == oracle::set_add(a, b));
      CHECK(symbol_mul(a, b) == oracle::set_mul(a, b));
    }
}

TEST_CASE("printed tables are the functions") {
  const auto& add = addition_table();
  const auto& mul = multiplication_table();
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      CHECK(add[i][j] == symbol_add(kAllSymbols[i], kAllSymbols[j]));
      CHECK(mul[i][j] == symbol_mul(kAllSymbols[i], kAllSymbols[j]));
    }
  // A few entries by hand.
  CHECK(symbol_add(sym("A+"), sym("A-")) == sym("A*"));
  CHECK(symbol_add(sym("N"), sym("A+")) == sym("S+"));
  CHECK(symbol_mul(sym("A-"), sym("A-")) == sym("A+"));
  CHECK(symbol_mul(sym("N"), sym("A*")) == sym("N"));
  CHECK(symbol_mul(sym("S+"), sym("A-")) == sym("S-"));
}

TEST_CASE("table algebra") {
  for (Symbol a : kAllSymbols)
    for (Symbol b : kAllSymbols) {
      CHECK(symbol_add(a, b) == symbol_add(b, a));
      CHECK(symbol_mul(a, b) == symbol_mul(b, a));
      for (Symbol c : kAllSymbols) {
        CHECK(symbol_add(symbol_add(a, b), c) == symbol_add(a, symbol_add(b, c)));
        CHECK(symbol_mul(symbol_mul(a, b), c) == symbol_mul(a, symbol_mul(b, c)));
      }
    }
  for (Symbol a : kAllSymbols) {
    CHECK(symbol_add(a, a) == a);
    CHECK(symbol_mul(a, sym("A+")) == a);
  }
}

TEST_CASE("symbol_from_signs inverts signs_of") {
  for (Symbol s : kAllSymbols) CHECK(symbol_from_signs(signs_of(s)) == s);
  CHECK_THROWS(symbol_from_signs(SignSet{}));
}

TEST_CASE("combine worked example") {
  CHECK(combine(SeprSequence::parse("S+N"), SeprSequence::parse("A+S+A-")).str() == "S+S+S*S-N");
}

TEST_CASE("combine is commutative and matches the convolution definition") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 6), len(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Symbol> a, b;
    for (int i = len(rng); i > 0; --i) a.push_back(kAllSymbols[static_cast<std::size_t>(pick(rng))]);
    for (int i = len(rng); i > 0; --i) b.push_back(kAllSymbols[static_cast<std::size_t>(pick(rng))]);
    const SeprSequence sa(a), sb(b);
    const auto c = combine(sa, sb);
    REQUIRE(c.size() == a.size() + b.size());
    CHECK(c == combine(sb, sa));
    const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
    for (int k = 1; k <= n + m; ++k) {
      // t_k = sum over i + j = k of a_i * b_j, with a_0 = b_0 = A+.
      bool have = false;
      Symbol acc = Symbol::N;
      for (int i = std::max(0, k - m); i <= std::min(n, k); ++i) {
        const Symbol x = i == 0 ? Symbol::Ap : a[static_cast<std::size_t>(i - 1)];
        const int j = k - i;
        const Symbol y = j == 0 ? Symbol::Ap : b[static_cast<std::size_t>(j - 1)];
        const Symbol t = oracle::set_mul(x, y);
        acc = have ? oracle::set_add(acc, t) : t;
        have = true;
      }
      CHECK(c.term(static_cast<std::size_t>(k)) == acc);
    }
  }
}

TEST_CASE("inverse sequence") {
  CHECK(inverse_sequence(SeprSequence::parse("NS-A+")).str() == "S-NA+");
  CHECK(inverse_sequence(SeprSequence::parse("S+A-A-")).str() == "A+S-A-");
  CHECK(neg_superscripts(SeprSequence::parse("A+S-A*N")).str() == "A-S+A*N");
}
