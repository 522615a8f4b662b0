#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sepr/pattern.hpp"

namespace sepr {

/// Parses "p/q", an integer, or a plain decimal such as "0.9" or "-1.25".
/// Throws ParseError with the given line and column on bad input.
mpq_class parse_rational(std::string_view text, std::size_t line = 0, std::size_t column = 0);

Sign sign_of(const mpq_class& q) noexcept;
Sign sign_of(const mpz_class& z) noexcept;

/// Square matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n);

  /// n lines of n whitespace-separated rationals; blank lines skipped.
  static RationalMatrix parse(std::string_view text);
  /// Rows of rational literals, e.g. {{"1", "9/10"}, {"9/10", "1"}}.
  static RationalMatrix from_strings(std::initializer_list<std::initializer_list<std::string_view>> rows);
  static RationalMatrix identity(int n);

  int order() const noexcept { return n_; }
  const mpq_class& operator()(int i, int j) const { return e_[idx(i, j)]; }
  mpq_class& operator()(int i, int j) { return e_[idx(i, j)]; }

  RationalMatrix sub(IndexSet rows, IndexSet cols) const;
  RationalMatrix principal(IndexSet alpha) const { return sub(alpha, alpha); }
  SignPattern sign_pattern() const;
  RationalMatrix transpose() const;

  /// Rows as lists of canonical literals ("p/q" or integers).
  std::vector<std::vector<std::string>> row_literals() const;
  std::string str() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }
  int n_ = 0;
  std::vector<mpq_class> e_;
};

/// Block diagonal / block upper-triangular assembly [[a, c], [0, b]]; c may
/// be empty (zero block) or a.order() x b.order() stored row-major.
RationalMatrix block_upper(const RationalMatrix& a, const RationalMatrix& b,
                           const std::vector<mpq_class>& c = {});

mpq_class determinant(const RationalMatrix& m);
Sign determinant_sign(const RationalMatrix& m);
/// Throws PreconditionError when m is singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Sign of the determinant of an integer matrix stored row-major. Uses
/// int64 Bareiss with 128-bit intermediates and falls back to GMP when an
/// intermediate leaves the int64 range.
Sign int_determinant_sign(std::span<const std::int64_t> a, int n);

/// Sign of det of the principal submatrix indexed by `alpha` of a row-major
/// n x n integer matrix.
Sign int_principal_minor_sign(std::span<const std::int64_t> a, int n, IndexSet alpha);

}  // namespace sepr
