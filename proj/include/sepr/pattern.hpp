#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sepr/signs.hpp"

namespace sepr {

/// Subset of {0, ..., n-1} (zero-based) as a bit mask, n <= 64.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t mask) : mask_(mask) {}

  static IndexSet full(int n);
  static IndexSet of(std::initializer_list<int> indices);

  constexpr std::uint64_t mask() const noexcept { return mask_; }
  int size() const noexcept { return std::popcount(mask_); }
  bool empty() const noexcept { return mask_ == 0; }
  bool contains(int i) const noexcept { return (mask_ >> i) & 1U; }
  IndexSet with(int i) const noexcept { return IndexSet(mask_ | (std::uint64_t{1} << i)); }
  IndexSet without(int i) const noexcept { return IndexSet(mask_ & ~(std::uint64_t{1} << i)); }
  IndexSet complement(int n) const { return IndexSet(full(n).mask_ & ~mask_); }
  bool subset_of(IndexSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }

  std::vector<int> indices() const;
  /// One-based, e.g. "{1,2,3}".
  std::string str() const;

  friend constexpr bool operator==(IndexSet, IndexSet) = default;
  friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Calls fn(IndexSet) for every k-subset of [n] in increasing mask order;
/// n <= 63.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(IndexSet{});
    return;
  }
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < end;) {
    fn(IndexSet(s));
    // Gosper's hack: next mask with the same popcount.
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

/// Rectangular matrix of signs. Square instances are sign patterns proper.
class SignPattern {
 public:
  SignPattern() = default;
  explicit SignPattern(int n) : SignPattern(n, n) {}
  SignPattern(int rows, int cols);

  /// n lines of n characters from {+, -, 0}; spaces and tabs are ignored,
  /// blank lines are skipped. Throws ParseError (line, column) on a bad
  /// character or a ragged shape.
  static SignPattern parse(std::string_view text);
  /// Each string is one row, e.g. {"0+", "-0"}.
  static SignPattern from_rows(const std::vector<std::string>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  /// Order of a square pattern; throws PreconditionError otherwise.
  int order() const;

  Sign operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
  void set(int i, int j, Sign s) { entries_[static_cast<std::size_t>(i * cols_ + j)] = s; }

  /// P[rows, cols] with indices taken in increasing order.
  SignPattern sub(IndexSet rows, IndexSet cols) const;
  /// P[alpha].
  SignPattern principal(IndexSet alpha) const { return sub(alpha, alpha); }
  /// P(alpha): rows and columns outside alpha.
  SignPattern principal_complement(IndexSet alpha) const;

  int nonzero_count() const noexcept;
  bool is_symmetric() const noexcept;
  bool is_nonnegative() const noexcept;
  SignPattern transpose() const;

  std::vector<std::string> row_strings() const;
  /// Lines joined with '\n', no trailing newline.
  std::string str() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
  friend auto operator<=>(const SignPattern&, const SignPattern&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Sign> entries_;
};

/// Block diagonal [[a, 0], [0, b]].
SignPattern direct_sum(const SignPattern& a, const SignPattern& b);

/// Outcome of expanding det P over all permutations.
struct DetSummary {
  AmbSign value = AmbSign::Zero;
  bool has_positive_term = false;
  bool has_negative_term = false;
  /// Nonzero terms visited before the expansion stopped; capped.
  std::uint64_t term_count_bound = 0;

  bool has_nonzero_term() const noexcept { return has_positive_term || has_negative_term; }
};

inline constexpr int kSignedDetMaxOrder = 16;

/// Standard-expression determinant of a square sign pattern. Stops as soon
/// as terms of both signs have been seen. Order-0 patterns give Plus.
/// Throws PreconditionError for non-square input or order > 16.
DetSummary signed_det(const SignPattern& p);

bool is_ambiguous(const SignPattern& p);

/// Enumerates the nonzero terms of det P as permutations (perm[i] = column
/// of row i) together with their sign, until fn returns false.
template <typename Fn>
void for_each_nonzero_term(const SignPattern& p, Fn&& fn);

/// Bipartite graph with rows as X and columns as Y.
struct Bigraph {
  int left = 0;
  int right = 0;
  std::vector<std::uint64_t> adjacency;  // adjacency[i] = columns j with p_ij != 0

  std::uint64_t neighborhood(IndexSet xs) const;
};

Bigraph bigraph(const SignPattern& p);

/// Size of a maximum matching (augmenting paths).
int maximum_matching(const Bigraph& g);

/// True iff a matching saturating X exists.
bool has_perfect_matching(const Bigraph& g);

// ---------------------------------------------------------------------------

namespace detail {

template <typename Fn>
bool term_dfs(const SignPattern& p, int row, std::uint64_t used, int inversions, Sign acc,
              std::vector<int>& perm, Fn& fn) {
  const int n = p.rows();
  if (row == n) return fn(std::as_const(perm), (inversions & 1) ? -acc : acc);
  for (int c = 0; c < n; ++c) {
    if ((used >> c) & 1U) continue;
    const Sign s = p(row, c);
    if (s == Sign::Zero) continue;
    const int above = std::popcount(used >> (c + 1));
    perm[static_cast<std::size_t>(row)] = c;
    if (!term_dfs(p, row + 1, used | (std::uint64_t{1} << c), inversions + above, acc * s, perm, fn))
      return false;
  }
  return true;
}

}  // namespace detail

template <typename Fn>
void for_each_nonzero_term(const SignPattern& p, Fn&& fn) {
  std::vector<int> perm(static_cast<std::size_t>(p.rows()), -1);
  detail::term_dfs(p, 0, 0, 0, Sign::Plus, perm, fn);
}

}  // namespace sepr
