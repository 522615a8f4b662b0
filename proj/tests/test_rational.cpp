#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sepr/error.hpp"

using namespace sepr;

TEST_CASE("rational literals") {
  CHECK(parse_rational("3/5") == mpq_class(3, 5));
  CHECK(parse_rational("-2") == -2);
  CHECK(parse_rational("0.9") == mpq_class(9, 10));
  CHECK(parse_rational("-1.25") == mpq_class(-5, 4));
  CHECK(parse_rational("4/6") == mpq_class(2, 3));
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("09/08") == mpq_class(9, 8));
  CHECK(parse_rational(".5") == mpq_class(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
}

TEST_CASE("matrix parsing") {
  const auto m = RationalMatrix::parse("1 9/10\n\n0.9 1\n");
  REQUIRE(m.order() == 2);
  CHECK(m(0, 1) == mpq_class(9, 10));
  CHECK(m(1, 0) == m(0, 1));
  CHECK(m.row_literals()[0][1] == "9/10");
  CHECK(RationalMatrix::parse(m.str()) == m);
  try {
    RationalMatrix::parse("1 2\n3 x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(RationalMatrix::parse("1 2\n3"), ParseError);
  CHECK(m.sign_pattern() == SignPattern::parse("++\n++"));
}

TEST_CASE("determinant matches the Leibniz formula") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 6;
    auto m = oracle::random_matrix(rng, n);
    if (trial % 3 == 0) m(0, 0) = mpq_class(1, 7);
    CAPTURE(m.str());
    const mpq_class d = oracle::det(m);
    CHECK(determinant(m) == d);
    CHECK(determinant_sign(m) == oracle::sign(d));
  }
}

TEST_CASE("integer determinant sign agrees with exact arithmetic") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> small(-5, 5);
  std::uniform_int_distribution<std::int64_t> big(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 7;
    std::vector<std::int64_t> a(static_cast<std::size_t>(n * n));
    RationalMatrix m(n);
    for (int i = 0; i < n * n; ++i) {
      a[static_cast<std::size_t>(i)] = trial % 2 ? big(rng) : small(rng);
      m(i / n, i % n) = mpz_class(std::to_string(a[static_cast<std::size_t>(i)]));
    }
    CHECK(int_determinant_sign(a, n) == determinant_sign(m));
    const IndexSet alpha(static_cast<std::uint64_t>(trial) & ((std::uint64_t{1} << n) - 1));
    CHECK(int_principal_minor_sign(a, n, alpha) == determinant_sign(m.principal(alpha)));
  }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 100) {
    const auto m = oracle::random_matrix(rng, 1 + done % 5);
    if (determinant(m) == 0) {
      CHECK_THROWS_AS(inverse(m), PreconditionError);
      continue;
    }
    const auto inv = inverse(m);
    const int n = m.order();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        mpq_class s = 0;
        for (int k = 0; k < n; ++k) s += m(i, k) * inv(k, j);
        CHECK(s == (i == j ? 1 : 0));
      }
    ++done;
  }
}

TEST_CASE("block upper-triangular assembly") {
  const auto a = RationalMatrix::parse("1 2\n3 4");
  const auto b = RationalMatrix::parse("5");
  const auto m = block_upper(a, b, {mpq_class(7), mpq_class(8)});
  CHECK(m == RationalMatrix::parse("1 2 7\n3 4 8\n0 0 5"));
  CHECK(block_upper(a, b) == RationalMatrix::parse("1 2 0\n3 4 0\n0 0 5"));
}
