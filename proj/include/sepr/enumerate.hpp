#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sepr/pattern.hpp"

namespace sepr {

enum Constraint : unsigned {
  kSymmetric = 1U << 0,
  kNonnegative = 1U << 1,
  kZeroDiagonal = 1U << 2,
  kFullOffDiagonal = 1U << 3,
  kSemiStable = 1U << 4,
  kIrreducible = 1U << 5,
};

/// Comma-separated names: symmetric, nonnegative, zero-diagonal,
/// full-off-diagonal, semi-stable, irreducible. Throws ParseError.
unsigned parse_constraints(std::string_view csv);
std::string constraints_str(unsigned constraints);

struct PatternFamily {
  int n = 1;
  unsigned constraints = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Size of the raw assignment space the iterator walks before the
/// semi-stable and irreducible filters.
std::uint64_t raw_space_size(const PatternFamily& f);

/// Visits every pattern of the family once, in lexicographic row-major
/// order with entry order 0 < + < -, until fn returns false. Throws
/// PreconditionError when the raw space exceeds `budget`.
void enumerate_patterns(const PatternFamily& f, const std::function<bool(const SignPattern&)>& fn,
                        std::uint64_t budget = kDefaultEnumerationBudget);

/// Parallel version: fn(pattern, worker) is called from `threads` workers,
/// each walking one contiguous slice of the raw space in order.
void enumerate_patterns_parallel(const PatternFamily& f, int threads,
                                 const std::function<void(const SignPattern&, int)>& fn,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

std::uint64_t count_patterns(const PatternFamily& f, std::uint64_t budget = kDefaultEnumerationBudget);

/// Strong diforests on n labelled vertices with loops in {0, -} and
/// off-diagonal pairs (+,-) or (-,+): the simplified sign semi-stable
/// patterns. n <= 6.
void enumerate_simplified_semistable(int n, const std::function<bool(const SignPattern&)>& fn);

}  // namespace sepr
