#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sepr/error.hpp"

using namespace sepr;

TEST_CASE("pattern parsing") {
  const auto p = SignPattern::parse("+ + 0\n- - +\n\n0 + 0\n");
  REQUIRE(p.order() == 3);
  CHECK(p(0, 0) == Sign::Plus);
  CHECK(p(1, 1) == Sign::Minus);
  CHECK(p(2, 0) == Sign::Zero);
  CHECK(p.str() == "++0\n--+\n0+0");
  CHECK(SignPattern::parse(p.str()) == p);
  CHECK(SignPattern::from_rows({"0+", "-0"}) == SignPattern::parse("0 +\n- 0"));
}

TEST_CASE("pattern parse errors report line and column") {
  try {
    SignPattern::parse("++\n+x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(SignPattern::parse("++\n+"), ParseError);
  CHECK_THROWS_AS(SignPattern(2, 3).order(), PreconditionError);
}

TEST_CASE("index sets") {
  const auto s = IndexSet::of({0, 2, 3});
  CHECK(s.size() == 3);
  CHECK(s.str() == "{1,3,4}");
  CHECK(s.complement(5) == IndexSet::of({1, 4}));
  CHECK(s.without(2).with(1) == IndexSet::of({0, 1, 3}));
  int count = 0;
  std::uint64_t last = 0;
  for_each_subset(6, 3, [&](IndexSet a) {
    CHECK(a.size() == 3);
    CHECK(a.mask() > last);
    last = a.mask();
    ++count;
  });
  CHECK(count == 20);
}

TEST_CASE("principal subpatterns and direct sums") {
  const auto p = SignPattern::parse("+-0\n0-+\n+0+");
  CHECK(p.principal(IndexSet::of({0, 2})) == SignPattern::parse("+0\n++"));
  CHECK(p.principal_complement(IndexSet::of({1})) == SignPattern::parse("+0\n++"));
  const auto d = direct_sum(SignPattern::parse("+"), SignPattern::parse("0-\n+0"));
  CHECK(d == SignPattern::parse("+00\n00-\n0+0"));
}

TEST_CASE("signed determinant examples") {
  CHECK(signed_det(SignPattern::parse("++\n+-")).value == AmbSign::Minus);
  CHECK(signed_det(SignPattern::parse("++\n--")).value == AmbSign::Ambiguous);
  CHECK(signed_det(SignPattern::parse("+0\n0+")).value == AmbSign::Plus);
  CHECK(signed_det(SignPattern::parse("+0\n+0")).value == AmbSign::Zero);
  CHECK(signed_det(SignPattern{}).value == AmbSign::Plus);
  CHECK_THROWS_AS(signed_det(SignPattern(17)), PreconditionError);
}

TEST_CASE("signed determinant matches permutation expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + trial % 6;
    const auto p = oracle::random_pattern(rng, n, 0.4);
    const auto t = oracle::det_terms(p);
    const auto d = signed_det(p);
    CAPTURE(p.str());
    CHECK(d.has_positive_term == t.plus);
    CHECK(d.has_negative_term == t.minus);
    const AmbSign expect = t.plus && t.minus ? AmbSign::Ambiguous
                                             : (t.plus ? AmbSign::Plus : (t.minus ? AmbSign::Minus : AmbSign::Zero));
    CHECK(d.value == expect);
    CHECK(is_ambiguous(p) == (t.plus && t.minus));
  }
}

TEST_CASE("nonzero terms are exactly the perfect matchings") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + trial % 7;
    const auto p = oracle::random_pattern(rng, n, 0.6);
    const auto g = bigraph(p);
    CAPTURE(p.str());
    CHECK(has_perfect_matching(g) == oracle::hall(p));
    CHECK(has_perfect_matching(g) == signed_det(p).has_nonzero_term());
    CHECK((maximum_matching(g) == n) == has_perfect_matching(g));
  }
}

TEST_CASE("term enumeration visits every nonzero term once") {
  const auto p = SignPattern::parse("+++\n+++\n+++");
  int plus = 0, minus = 0;
  for_each_nonzero_term(p, [&](const std::vector<int>&, Sign s) {
    (s == Sign::Plus ? plus : minus)++;
    return true;
  });
  CHECK(plus == 3);
  CHECK(minus == 3);
}
