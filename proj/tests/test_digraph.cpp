#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sepr/error.hpp"

using namespace sepr;

TEST_CASE("strong components agree with transitive closure") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + trial % 7;
    const auto p = oracle::random_pattern(rng, n, 0.75);
    const auto r = oracle::reach(p);
    const auto comps = strong_components(SignedDigraph(p));
    std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (int v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK((comp_of[i] == comp_of[j]) == (r[i][j] && r[j][i]));
    CHECK(is_irreducible(p) == oracle::irreducible(p));
  }
}

TEST_CASE("simplify zeroes exactly the arcs between components") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 6;
    const auto p = oracle::random_pattern(rng, n, 0.7);
    const auto r = oracle::reach(p);
    const auto s = simplify(p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(s(i, j) == (r[i][j] && r[j][i] ? p(i, j) : Sign::Zero));
    CHECK(simplify(s) == s);
  }
}

TEST_CASE("simple cycles") {
  const SignedDigraph g(SignPattern::parse("-+0\n0 0+\n+0 0"));
  std::vector<SimpleCycle> cycles;
  for_each_simple_cycle(g, 3, [&](const SimpleCycle& c) {
    cycles.push_back(c);
    return true;
  });
  REQUIRE(cycles.size() == 2);
  CHECK(max_simple_cycle_length(g) == 3);
  const auto lc = find_long_cycle(g);
  REQUIRE(lc);
  CHECK(lc->vertices == std::vector<int>{0, 1, 2});
  CHECK(lc->product == Sign::Plus);
  CHECK(lc->signed_product == Sign::Plus);
}

TEST_CASE("cycle report composite orders") {
  const SignedDigraph g(SignPattern::parse("-+0\n-0+\n0-0"));
  const auto r = cycle_report(g, 3);
  CHECK(r.max_simple_cycle_length == 2);
  CHECK(r.composite_cycle_orders == std::vector<int>{1, 2, 3});
  for (const auto& [k, s] : r.signed_product_signs_by_order) {
    CAPTURE(k);
    CHECK(s.has(k % 2 ? Sign::Minus : Sign::Plus));
    CHECK_FALSE(s.has(k % 2 ? Sign::Plus : Sign::Minus));
  }
}

TEST_CASE("sign semi-stability conditions") {
  CHECK(sign_semi_stability(SignPattern::parse("-+0\n-0+\n0-0")).holds);
  CHECK(sign_semi_stability(SignPattern::parse("+")).condition == "alpha");
  CHECK(sign_semi_stability(SignPattern::parse("0+\n+0")).condition == "beta");
  CHECK(sign_semi_stability(SignPattern::parse("0+0\n00+\n+00")).condition == "gamma");
  CHECK(is_sign_semi_stable(SignPattern::parse("0")));
}

TEST_CASE("stable versus semi-stable pair") {
  const auto p = SignPattern::parse(
      "-+000\n"
      "-0+00\n"
      "0-0+0\n"
      "00-0+\n"
      "000-0");
  const auto q = SignPattern::parse(
      "0+000\n"
      "-0+00\n"
      "0--+0\n"
      "00-0+\n"
      "000-0");
  CHECK(is_sign_semi_stable(p));
  CHECK(is_sign_semi_stable(q));
  CHECK(is_sign_stable_irreducible(p));
  const auto v = sign_stability_irreducible(q);
  CHECK_FALSE(v.holds);
  CHECK(v.condition == "epsilon");
  CHECK_THROWS_AS(sign_stability_irreducible(SignPattern::parse("-0\n0-")), PreconditionError);
}

TEST_CASE("matching number and ditrees") {
  CHECK(matching_number(SignedDigraph(make_family(Family::Path, 5, SignRule::Skew))) == 2);
  CHECK(matching_number(SignedDigraph(make_family(Family::Star, 5, SignRule::Skew))) == 1);
  CHECK(matching_number(SignedDigraph(make_family(Family::Complete, 6, SignRule::Positive))) == 3);
  CHECK(is_strong_ditree(SignedDigraph(make_family(Family::Path, 4, SignRule::Skew))));
  CHECK_FALSE(is_strong_ditree(SignedDigraph(make_family(Family::DoublyDirectedCycle, 4, SignRule::Skew))));
  CHECK(is_strong_diforest(SignedDigraph(direct_sum(make_family(Family::Path, 2, SignRule::Skew),
                                                    make_family(Family::Star, 3, SignRule::Skew)))));
  CHECK(is_strong_ditree(SignedDigraph(SignPattern::parse("-"))));
}

TEST_CASE("families") {
  CHECK(make_family(Family::Path, 3, SignRule::Skew) == SignPattern::parse("0+0\n-0+\n0-0"));
  CHECK(make_family(Family::PathLoopEnd, 3, SignRule::Skew) == SignPattern::parse("-+0\n-0+\n0-0"));
  CHECK(make_family(Family::Cycle, 3, SignRule::Positive) == SignPattern::parse("0+0\n00+\n+00"));
  CHECK(make_family(Family::CycleWithLoops, 3, SignRule::NegativeDiagonal, 2) ==
        SignPattern::parse("-+0\n0-+\n+00"));
  CHECK(make_family(Family::LeafLoopStar, 3, SignRule::Positive) == SignPattern::parse("0++\n++0\n+0+"));
  CHECK(make_family(Family::StarLoopCentre, 3, SignRule::Positive) == SignPattern::parse("+++\n+00\n+00"));
  CHECK_THROWS_AS(make_family(Family::LeafLoopStar, 2, SignRule::Positive), PreconditionError);
  CHECK_THROWS_AS(make_family(Family::DoublyDirectedCycle, 2, SignRule::Positive), PreconditionError);
  for (auto f : {Family::Path, Family::Star, Family::Complete, Family::DoublyDirectedCycle})
    CHECK(family_from_string(to_string(f)) == f);
  for (auto r : {SignRule::Skew, SignRule::Positive, SignRule::NegativeDiagonal})
    CHECK(sign_rule_from_string(to_string(r)) == r);
  CHECK_FALSE(family_from_string("banana"));
}

TEST_CASE("cycle sign structure") {
  // Skew 2-cycles have positive signed product; the loop makes it negative.
  CHECK(classify_cycle_sign_structure(make_family(Family::Path, 4, SignRule::Skew)) ==
        CycleSignStructure::AllSignedCycleProductsPositive);
  CHECK(classify_cycle_sign_structure(make_family(Family::PathLoopEnd, 4, SignRule::Skew)) ==
        CycleSignStructure::AllCycleProductsNegative);
  CHECK(classify_cycle_sign_structure(make_family(Family::Complete, 3, SignRule::Positive)) ==
        CycleSignStructure::Mixed);
  CHECK(classify_cycle_sign_structure(SignPattern::parse("00\n00")) ==
        CycleSignStructure::AllSignedCycleProductsPositive);
}

TEST_CASE("dot output") {
  const auto dot = SignedDigraph(SignPattern::parse("-+\n00")).to_dot("P");
  CHECK(dot.find("digraph P") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}
