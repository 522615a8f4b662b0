#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sepr/rational.hpp"
#include "sepr/signs.hpp"

namespace sepr {

inline constexpr int kSeprMaxOrder = 14;

/// Exact sepr-sequence from the signs of all principal minors. n <= 14.
SeprSequence sepr_of_matrix(const RationalMatrix& b);

/// Same for an integer matrix stored row-major (used by the sweeps).
SeprSequence sepr_of_int_matrix(std::span<const std::int64_t> a, int n);

/// Symbol for the set of signs seen among the minors of one order.
Symbol classify_minor_signs(SignSet signs);

/// Positive magnitudes used for |b_ij| in grid realizations.
class MagnitudeGrid {
 public:
  /// {1/6, 1/3, 1/2, 1, 2, 3, 6}.
  static MagnitudeGrid standard();
  /// The standard grid plus 1/n!.
  static MagnitudeGrid with_epsilon(int n);
  /// Comma-separated rationals, e.g. "1/2,1,2". Throws ParseError.
  static MagnitudeGrid parse(std::string_view csv);

  explicit MagnitudeGrid(std::vector<mpq_class> values);

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<mpq_class>& values() const noexcept { return values_; }
  /// values()[i] * scale(), all exact integers.
  const std::vector<std::int64_t>& scaled() const noexcept { return scaled_; }
  /// Least common denominator of the values.
  const mpz_class& scale() const noexcept { return scale_; }
  std::string str() const;

 private:
  std::vector<mpq_class> values_;
  std::vector<std::int64_t> scaled_;
  mpz_class scale_;
};

/// Deterministic enumeration of realizations of P with magnitudes from a
/// grid: every assignment when |grid|^nnz <= budget, otherwise `budget`
/// assignments drawn from a counter-based generator keyed by `seed`.
class GridRealizer {
 public:
  GridRealizer(const SignPattern& p, MagnitudeGrid grid, std::uint64_t budget, std::uint64_t seed = 0);

  int order() const noexcept { return n_; }
  std::uint64_t count() const noexcept { return count_; }
  bool exhaustive() const noexcept { return exhaustive_; }
  const MagnitudeGrid& grid() const noexcept { return grid_; }

  RationalMatrix at(std::uint64_t i) const;
  /// Realization i multiplied by grid().scale(), row-major into out (size n*n).
  void scaled_at(std::uint64_t i, std::span<std::int64_t> out) const;

 private:
  void digits(std::uint64_t i, std::vector<std::uint32_t>& d) const;

  int n_ = 0;
  MagnitudeGrid grid_;
  std::vector<int> cells_;  // row-major cell indices of the nonzero entries
  std::vector<Sign> signs_;
  std::uint64_t count_ = 0;
  bool exhaustive_ = true;
  std::uint64_t seed_ = 0;
};

/// Distinct sequences seen over a grid sweep, each with the lowest index
/// that produced it.
struct SeprSweep {
  std::map<SeprSequence, std::uint64_t> first_index;
  std::uint64_t visited = 0;
  bool exhaustive = false;
};

SeprSweep sweep_sepr(const GridRealizer& r, int threads = 0);

inline constexpr int kAllNonzeroMaxOrder = 10;

/// B in Q(P) with det B[alpha, beta] != 0 for every equal-size pair with
/// P[alpha, beta] ambiguous. n <= 10.
RationalMatrix allnonzero_realization(const SignPattern& p);

/// All equal-size (alpha, beta) with P[alpha, beta] ambiguous, ordered by
/// size, then alpha mask, then beta mask.
std::vector<std::pair<IndexSet, IndexSet>> ambiguous_pairs(const SignPattern& p);

/// D B D with d_i = 1 / sqrt(b_ii). Requires a nonnegative matrix whose
/// diagonal entries are positive squares of rationals.
RationalMatrix scale_diagonal_to_one(const RationalMatrix& b);

struct InverseCheck {
  bool pass = false;
  SeprSequence original;
  SeprSequence inverse;
  SeprSequence expected;
};

/// n <= 6; throws PreconditionError when b is singular.
InverseCheck verify_inverse_theorem(const RationalMatrix& b);

/// splitmix64 finaliser; exposed for the sampling code in other modules.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace sepr
